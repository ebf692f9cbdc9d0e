"""
Module containing the CoefficientFactory and the counter-example builder
"""
import logging
import math

from core.exceptions import ParameterError

from .coefficient import (
    Coefficient,
    ConstantCoefficient,
    CounterexampleCoefficient,
    PowerLawCoefficient,
    TabulatedCoefficient,
)

logger = logging.getLogger(__name__)


def make_counterexample(lam: float, N: int) -> CounterexampleCoefficient:
    """
    Builds the spliced counter-example coefficient for shape `lam` and
    dimension `N`.

    The splice point is u_star = exp(-2 (lam + N - 2) / lam), where the
    logarithmic branch denominator equals lam + N - 2 > 0, and the linear
    branch scale a_star = a(u_star-) / (1 + u_star) makes a continuous.

    Parameters
    ----------
    lam: float
        Shape of the profile exp(-s^lam), must be > 2
    N: int
        Space dimension, >= 1

    Returns
    -------
    CounterexampleCoefficient

    Raises
    ------
    ParameterError
        If lam <= 2 or N is not a positive integer
    """
    if not lam > 2:
        raise ParameterError(
            f"The counter-example requires lambda > 2, got {lam}"
        )
    if int(N) != N or N < 1:
        raise ParameterError(f"Dimension N must be an integer >= 1: {N}")

    shift = lam + N - 2
    log_star = 2 * shift / lam
    u_star = math.exp(-log_star)
    left = log_star ** (2 / lam) / (lam * log_star - shift)
    a_star = left / (1 + u_star)
    logger.debug(
        "Counter-example lambda=%g N=%d: u_star=%g a_star=%g",
        lam,
        N,
        u_star,
        a_star,
    )
    return CounterexampleCoefficient(lam, int(N), u_star, a_star)


class CoefficientFactory:
    """
    Builds coefficients from their JSON description
    {"family": ..., "params": {...}} (tabulated tables in "s" and "a")
    """

    FAMILIES = {
        PowerLawCoefficient.family: PowerLawCoefficient,
        CounterexampleCoefficient.family: CounterexampleCoefficient,
        TabulatedCoefficient.family: TabulatedCoefficient,
        ConstantCoefficient.family: ConstantCoefficient,
    }

    @classmethod
    def from_spec(cls, spec: dict) -> Coefficient:
        """
        Parameters
        ----------
        spec: dict
            The JSON description of the coefficient

        Returns
        -------
        Coefficient

        Raises
        ------
        ParameterError
            If the family is unknown or a parameter is missing
        """
        family = spec.get("family")
        try:
            family_cls = cls.FAMILIES[family]
        except KeyError:
            raise ParameterError(f"Unknown coefficient family: {family}")

        params = dict(spec.get("params") or {})
        if family_cls is TabulatedCoefficient:
            # Tables travel next to "params"
            params.setdefault("s", spec.get("s"))
            params.setdefault("a", spec.get("a"))
        if family_cls is CounterexampleCoefficient and (
            "u_star" not in params or "a_star" not in params
        ):
            try:
                return make_counterexample(params["lambda"], params["N"])
            except KeyError as exc:
                raise ParameterError(f"Missing parameter: {exc.args[0]}")

        try:
            return family_cls.from_params(params)
        except (KeyError, TypeError) as exc:
            raise ParameterError(
                f"Invalid parameters for family '{family}': {exc}"
            )
