"""Deodhar's mask framework for Kazhdan-Lusztig polynomials of finite Weyl groups."""

from .coxeter import (
    CoxeterSystem, Element, apply_generator, bruhat_interval, bruhat_leq,
    build_system, element_from_word, enumerate_elements, inverse,
    is_right_descent, length, reduced_word, reduced_words,
)
from .errors import ConfigurationError, DeodharError, PreconditionError, UnsupportedError

__version__ = "0.1.0"
