"""Named polynomials shared across test modules."""

from freeperiod import parse_poly

TREFOIL = parse_poly("t^2 - t + 1")
FIG8 = parse_poly("t^2 - 3t + 1")
GOLDEN = parse_poly("t^2 - t - 1")
K14 = parse_poly("4t^6 - 17t^5 + 38t^4 - 51t^3 + 38t^2 - 17t + 4")

# the two genus <= 16 survey escapes at period 2
D30 = parse_poly(
    "t^30 - t^29 + t^28 - t^26 + t^25 - t^24 + t^18 - t^17 + t^15"
    " - t^13 + t^12 - t^6 + t^5 - t^4 + t^2 - t + 1")
D26 = parse_poly(
    "t^26 - t^25 + t^24 - t^23 + t^20 - t^19 + t^14 - t^13 + t^12"
    " - t^7 + t^6 - t^3 + t^2 - t + 1")
