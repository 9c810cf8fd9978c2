import math
from typing import Tuple


class Bounds:
    """
    Bounds represents a closed two-sided estimate ``lower <= value <= upper``.
    Every analytic sandwich in the library returns one.
    """
    __slots__ = ('_lower', '_upper')

    def __init__(self, lower: float, upper: float):
        """
        Initializes Bounds object. Lower end must not exceed the upper end.
        Infinite ends are allowed (a vacuous side of a bound).

        >>> Bounds(0.25, 1.0)
        Bounds(lower=0.25, upper=1.0)

        :param lower: lower end of the sandwich
        :param upper: upper end of the sandwich
        """
        if math.isnan(lower) or math.isnan(upper):
            raise ValueError('bounds must not be NaN')

        if not lower <= upper:
            raise ValueError(f'lower bound {lower!r} exceeds upper bound {upper!r}')

        self._lower = float(lower)
        self._upper = float(upper)

    @property
    def lower(self) -> float:
        """
        Returns the lower end.

        :return: lower end of the sandwich
        """
        return self._lower

    @property
    def upper(self) -> float:
        """
        Returns the upper end.

        :return: upper end of the sandwich
        """
        return self._upper

    @property
    def width(self) -> float:
        return self._upper - self._lower

    def contains(self, value: float, strict: bool = False) -> bool:
        """
        Checks whether value lies inside the bounds.

        >>> Bounds(0.0, 1.0).contains(1.0)
        True

        >>> Bounds(0.0, 1.0).contains(1.0, strict=True)
        False

        :param value: value to check
        :param strict: require strict inequalities on both sides (default: False)
        :return: True if value is inside the bounds, False otherwise
        """
        if strict:
            return self._lower < value < self._upper

        return self._lower <= value <= self._upper

    def widened(self, margin: float) -> 'Bounds':
        """
        Returns copy of the bounds with both ends moved outwards by margin.
        Used to compare Monte Carlo estimates with a number of standard errors of slack.

        >>> Bounds(0.25, 0.5).widened(0.25)
        Bounds(lower=0.0, upper=0.75)

        :param margin: non-negative slack
        :return: widened bounds
        """
        if margin < 0:
            raise ValueError('margin must be non-negative')

        return Bounds(self._lower - margin, self._upper + margin)

    def as_tuple(self) -> Tuple[float, float]:
        return self._lower, self._upper

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return f'[{self._lower:.6g}, {self._upper:.6g}]'

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(lower={self._lower!r}, upper={self._upper!r})'

    def __eq__(self, other: 'Bounds') -> bool:
        """
        Compares two bounds for equality. Bounds are equal if both ends are equal.

        :param other: other bounds
        :return: True if both ends are equal, False otherwise
        """
        if not isinstance(other, Bounds):
            return NotImplemented

        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())
