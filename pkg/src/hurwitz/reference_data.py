"""Bundled reference tables of connected Hurwitz numbers and parity data.

``PRINTED_TABLE_SMALL`` and ``PRINTED_TABLE_SIX`` reproduce widely published
values for genus 0..6 with profile weight at most 5 and exactly 6.  One
printed cell is a known typo: at genus 2 the profile (1,1,1) must agree with
(2,1) by the merge identity, and every computation route gives 364, not the
printed 264.  The typo is kept verbatim here and flagged through ``ERRATA``.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition

GENUS_COLUMNS = tuple(range(7))

HALF = Fraction(1, 2)

# profile -> values for g = 0..6, exactly as printed
PRINTED_TABLE_SMALL: dict[Partition, tuple] = {
    (1,): (1, 0, 0, 0, 0, 0, 0),
    (2,): (HALF, HALF, HALF, HALF, HALF, HALF, HALF),
    (1, 1): (HALF, HALF, HALF, HALF, HALF, HALF, HALF),
    (3,): (1, 9, 81, 729, 6561, 59049, 531441),
    (2, 1): (4, 40, 364, 3280, 29524, 265720, 2391484),
    (1, 1, 1): (4, 40, 264, 3280, 29524, 265720, 2391484),
    (4,): (4, 160, 5824, 209920, 7558144, 272097280, 9795518464),
    (3, 1): (27, 1215, 45927, 1673055, 60407127, 2176250895, 78359381127),
    (2, 2): (12, 480, 17472, 629760, 22674432, 816291840, 29386555392),
    (2, 1, 1): (120, 5460, 206640, 7528620, 271831560, 9793126980, 352617206880),
    (1, 1, 1, 1): (120, 5460, 206640, 7528620, 271831560, 9793126980, 352617206880),
    (5,): (25, 3125, 328125, 33203125, 3330078125, 333251953125, 33331298828125),
    (4, 1): (256, 35840, 3956736, 409108480, 41394569216, 4156871147520, 416314027933696),
    (3, 2): (216, 26460, 2748816, 277118820, 27762350616, 2777408868780, 277768823459616),
    (3, 1, 1): (1620, 234360, 26184060, 2719617120, 275661886500, 27700994510280, 2774997187556940),
    (2, 2, 1): (1440, 188160, 20160000, 2059960320, 207505858560, 20803767828480, 2082272553861120),
    (2, 1, 1, 1): (8400, 1189440, 131670000, 13626893280, 1379375197200, 138543794363520, 13876390744734000),
    (1, 1, 1, 1, 1): (8400, 1189440, 131670000, 13626893280, 1379375197200, 138543794363520, 13876390744734000),
}

PRINTED_TABLE_SIX: dict[Partition, tuple] = {
    (6,): (216, 68040, 16901136, 3931876080, 895132294056, 202252053177720, 45575342328002976),
    (5, 1): (3125, 1093750, 287109375, 68750000000, 15885009765625, 3615783691406250, 817717742919921875),
    (4, 2): (2560, 788480, 192783360, 44490434560, 10093234511360, 2277308480778240, 512887872299714560),
    (4, 1, 1): (26880, 9838080, 2638056960, 638265788160, 148222087453440, 33821881625226240, 7657985270680120320),
    (3, 3): (1215, 357210, 86113125, 19797948720, 4487187539835, 1012204758777030, 227953607360883345),
    (3, 2, 1): (45360, 14696640, 3710765520, 872470478880, 199914163328880, 45334411650702720, 10235275836481639440),
    (3, 1, 1, 1): (181440, 65998800, 17634743280, 4259736280800, 988561437383520, 225514718440830000, 51056208831963782160),
    (2, 2, 2): (6720, 2016000, 486541440, 111644332800, 25269270586560, 5696315163302400, 1282471780397902080),
    (2, 2, 1, 1): (241920, 80438400, 20589085440, 4874762692800, 1120875021826560, 254613060830419200, 57531761566570529280),
    (2, 1, 1, 1, 1): (1088640, 382536000, 100557737280, 24109381296000, 5576183206513920, 1270116357617016000, 287353806073982746560),
    (1, 1, 1, 1, 1, 1): (1088640, 382536000, 100557737280, 24109381296000, 5576183206513920, 1270116357617016000, 287353806073982746560),
}

# (profile, genus) -> (printed value, corrected value)
ERRATA: dict[tuple[Partition, int], tuple[int, int]] = {
    ((1, 1, 1), 2): (264, 364),
}


def corrected_value(mu: Partition, g: int) -> Fraction | int:
    """Reference value with known typos replaced by their corrected values."""
    table = PRINTED_TABLE_SMALL if sum(mu) <= 5 else PRINTED_TABLE_SIX
    printed = table[mu][g]
    fix = ERRATA.get((mu, g))
    return fix[1] if fix else printed


def reference_rows(n: int) -> dict[Partition, tuple]:
    """Printed rows for profiles of total weight n (supported: n <= 6)."""
    if n <= 5:
        return {mu: vals for mu, vals in PRINTED_TABLE_SMALL.items() if sum(mu) == n}
    if n == 6:
        return dict(PRINTED_TABLE_SIX)
    raise ValueError("reference tables cover weight at most 6")


# Pairs (g, mu) with even branch-point count, all parts odd and length at most
# two, whose value is nevertheless even; the published survey lists them up to
# branch-point count 14 (none occur below 8).
PUBLISHED_CONVERSE_FAILURES: dict[int, frozenset[tuple[int, Partition]]] = {
    8: frozenset({(1, (7,)), (1, (5, 1)), (1, (3, 3))}),
    10: frozenset({(0, (7, 3)), (1, (7, 1)), (1, (5, 3)), (1, (9,))}),
    12: frozenset({(0, (7, 5)), (1, (7, 3)), (3, (5, 1)), (3, (3, 3)), (3, (7,))}),
    14: frozenset(
        {
            (0, (11, 3)),
            (0, (7, 7)),
            (1, (7, 5)),
            (2, (9, 1)),
            (2, (7, 3)),
            (2, (5, 5)),
            (2, (11,)),
            (3, (7, 1)),
            (3, (5, 3)),
            (3, (9,)),
        }
    ),
}
