"""Deterministic decimal rendering of exact rationals.

Reports carry exact integer counts; any decimal shown next to them is
produced here by integer arithmetic (round half up), so the rendered
digits never depend on binary floating point.
"""


def decimal_str(numerator: int, denominator: int, places: int = 6) -> str:
    """Render numerator/denominator as a fixed-point decimal string.

    Rounds half away from zero at the last place.  places=0 yields a
    plain integer string.
    """
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    if places < 0:
        raise ValueError("places must be nonnegative")
    sign = "-" if numerator < 0 else ""
    scaled = abs(numerator) * 10**places
    q, r = divmod(scaled, denominator)
    if 2 * r >= denominator:
        q += 1
    if places == 0:
        return sign + str(q)
    digits = str(q).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def float_str(value: float, places: int = 12) -> str:
    """Fixed-point rendering of a float with an explicit digit count."""
    return f"{value:.{places}f}"
