"""
Contains the core mixins that concrete coefficient and weight families
inherit to advertise a closed form
"""
from abc import ABC, abstractmethod

import numpy as np


class ClosedFormIntegralMixin(ABC):
    """
    Mixin class for coefficient families whose integral I(s) is known in
    closed form. Used to cross-check the quadrature, never in its place.
    """

    @abstractmethod
    def closed_form_I(self, s: np.ndarray) -> np.ndarray:
        """
        Abstract method that child classes must implement
        to provide I(s) without quadrature.
        """


class MonomialMixin(ABC):
    """
    Mixin class for families of the form C * s**e on (0, inf).

    Products and powers of monomials are monomials, so derivative
    inequalities between them can be evaluated in closed form.
    """

    @abstractmethod
    def monomial(self) -> tuple[float, float]:
        """
        Abstract method that child classes must implement
        to return the pair (C, e).
        """
