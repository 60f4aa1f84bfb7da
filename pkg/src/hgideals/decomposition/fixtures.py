"""Hand-written S-polynomial reductions, checked symbolically.

Each fixture records a pair of minors g1, g2 and a combination of minors
and variables claimed to equal S(g1, g2).  Combinations use the notation of
reference tables: ``x_{r,c}`` for a variable, ``x_c``/``y_c``/``z_c`` for
rows 1/2/3, ``[rows|cols]`` for a minor and ``[cols]`` for a maximal minor.

A few reference rows contain a transcription slip (a sign, or one wrong
index).  For those the original text is kept in ``verbatim`` and the repaired
combination in ``corrected``; :func:`verify_identity` checks the corrected
text, while :func:`verify_verbatim` checks the original text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..exactalg.groebner import s_polynomial
from ..exactalg.minors import maximal_minor, minor
from ..exactalg.polynomial import Polynomial, Ring

_ROW_LETTERS = "xyz"
_FACTOR = re.compile(
    r"x_\{(?P<r>\d+),(?P<c>\d+)\}"
    r"|(?P<letter>[xyz])_(?P<col>\d)"
    r"|\[(?P<rows>\d+)\|(?P<cols>\d+)\]"
    r"|\[(?P<maxcols>\d+)\]"
    r"|(?P<num>\d+)"
)


def parse_combination(ring: Ring, text: str) -> Polynomial:
    """Expand a formal sum of products of variables and minors."""
    s = text.replace("−", "-").replace(" ", "").replace("\n", "")
    if not s:
        raise ValueError("empty combination")
    if s[0] not in "+-":
        s = "+" + s
    total = ring.zero()
    pos = 0
    while pos < len(s):
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        term = ring.const(sign)
        start = pos
        while pos < len(s) and s[pos] not in "+-":
            m = _FACTOR.match(s, pos)
            if not m:
                raise ValueError(f"cannot parse {s[pos:]!r} in {text!r}")
            if m["r"]:
                term = term * ring.var(int(m["r"]), int(m["c"]))
            elif m["letter"]:
                term = term * ring.var(_ROW_LETTERS.index(m["letter"]) + 1, int(m["col"]))
            elif m["rows"]:
                term = term * minor(ring, map(int, m["rows"]), map(int, m["cols"]))
            elif m["maxcols"]:
                term = term * maximal_minor(ring, [int(ch) for ch in m["maxcols"]])
            else:
                term = term * int(m["num"])
            pos = m.end()
        if pos == start:
            raise ValueError(f"empty term in {text!r}")
        total = total + term
    return total


@dataclass(frozen=True)
class IdentityFixture:
    group: str
    d: int
    n: int
    g1: str
    g2: str
    verbatim: str
    corrected: str | None = None
    note: str = ""

    @property
    def statement(self) -> str:
        return self.corrected or self.verbatim

    def ring(self) -> Ring:
        return Ring(self.d, self.n)

    def label(self) -> str:
        return f"{self.group}: {self.g1}, {self.g2}"


def _holds(fix: IdentityFixture, text: str) -> bool:
    ring = fix.ring()
    g1 = parse_combination(ring, fix.g1)
    g2 = parse_combination(ring, fix.g2)
    return (s_polynomial(g1, g2) - parse_combination(ring, text)).is_zero()


def verify_identity(fix: IdentityFixture) -> bool:
    """S(g1, g2) minus the stated combination is the zero polynomial."""
    return _holds(fix, fix.statement)


def verify_verbatim(fix: IdentityFixture) -> bool:
    return _holds(fix, fix.verbatim)


def corrupt(fix: IdentityFixture) -> IdentityFixture:
    """Flip the sign of the first term: a negative control."""
    text = fix.statement.strip()
    flipped = text[1:] if text[0] == "-" else "-" + text.lstrip("+")
    return IdentityFixture(fix.group, fix.d, fix.n, fix.g1, fix.g2, flipped, None, "corrupted")


FIXTURES: tuple[IdentityFixture, ...] = (
    IdentityFixture(
        "5x5 two 3-minors", 5, 5, "[123|123]", "[345|345]",
        "x_{4,5}x_{5,4}[123|123] + [35|45][124|123] - [25|45][134|123] + [15|45][234|123]"
        " - [34|45][125|123] + [24|45][135|123] - [14|45][235|123] - [23|45][145|123]"
        " + [13|45][245|123] - [12|45][345|123] + [45|12][123|345] - [35|12][124|345]"
        " + [25|12][134|345] - [15|12][234|345] + [34|12][125|345] - [24|12][135|345]"
        " + [14|12][235|345] + [23|12][145|345] - [13|12][245|345] - x_{1,2}x_{2,1}[345|345]",
    ),
    IdentityFixture(
        "3x4 first column shared", 3, 4, "[12|12]", "[134]",
        "- y_1 [234] + y_4z_3 [12|12] + x_3y_4 [23|12] - x_4y_3 [23|12]",
    ),
    IdentityFixture(
        "3x4 first column shared", 3, 4, "[13|12]", "[134]",
        "-z_1[234] + y_4z_3 [12|12]+ x_3z_4 [23|12] - x_4y_3 [23|12]",
        "-z_1[234] + y_4z_3 [13|12] + x_3z_4 [23|12] - x_4z_3 [23|12]",
        "second term needs [13|12], last term needs z_3 in place of y_3",
    ),
    IdentityFixture(
        "3x4 last column shared", 3, 4, "[13|34]", "[124]",
        "- x_4 [123] + x_1z_2 [12|34] + x_2y_1 [13|34] - x_2z_1 [12|34]",
    ),
    IdentityFixture(
        "3x4 last column shared", 3, 4, "[23|34]", "[124]",
        "-y_4[123] - x_2y_1 [23|34] + y_1z_2 [12|34] - y_2z_1 [12|34]",
        "-y_4[123] + x_2y_1 [23|34] + y_1z_2 [12|34] - y_2z_1 [12|34]",
        "sign of the x_2y_1 term",
    ),
    IdentityFixture(
        "4x4 last column shared", 4, 4, "[14|34]", "[234|124]",
        "-x_{1,4} [234|123] +[24|12][13|34] -[34|12][12|34] -x_{2,2} x_{3,1} [14|34]",
        "-x_{1,4} [234|123] +[24|12][13|34] -[34|12][12|34] +x_{2,2} x_{3,1} [14|34]",
        "sign of the x_{2,2}x_{3,1} term",
    ),
    IdentityFixture(
        "4x4 last column shared", 4, 4, "[24|34]", "[134|124]",
        "-x_{2,4}[134|123] +[14|12] [23|34] +[34|12] [12|34] +x_{1,2} x_{3,1} [24|34]",
    ),
    IdentityFixture(
        "4x4 last column shared", 4, 4, "[34|34]", "[124|124]",
        "-x_{3,4} [124|123] -[14|12] [23|34] +[24|12] [13|34] +x_{1,2} x_{2,1} [34|34]",
    ),
    IdentityFixture(
        "4x4 last column shared", 4, 4, "[34|34]", "[123|123]",
        "-x_{3,4}[124|123] +x_{2,3}[134|123] -x_{1,3}[234|124] +[34|12][12|34] +x_{1,2}x_{2,1}[34|34]",
        "-x_{3,4}[124|123] +x_{2,3}[134|124] -x_{1,3}[234|124] +[34|12][12|34] +x_{1,2}x_{2,1}[34|34]",
        "second term needs columns 124",
    ),
    IdentityFixture(
        "4x4 first column shared", 4, 4, "[12|12]", "[134|134]",
        "-x_{1,2}[234|134] -x_{3,1}[124|234] +x_{4,1}[123|234] +[12|34][34|12] +x_{3,4}x_{4,3}[12|12]",
    ),
    IdentityFixture(
        "4x4 first column shared", 4, 4, "[13|12]", "[124|134]",
        "-x_{3,1}[124|234] +[14|34] [23|12] +[12|34] [34|12] +x_{2,4}x_{4,3}[13|12]",
    ),
    IdentityFixture(
        "4x4 first column shared", 4, 4, "[14|12]", "[123|134]",
        "-x_{4,1} [123|234] +[13|34] [24|12] -[12|34] [34|12] +x_{2,4}x_{3,3}[14|12]",
    ),
    IdentityFixture(
        "4x4 first column shared", 4, 4, "[12|12]", "[234|234]",
        "-x_{1,2}[234|134] +[24|34][13|12] -[23|34][14|12] +x_{3,4}x_{4,3}[12|12]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[23|23]", "[123|124]",
        "-x_{3,2}[123|134]+[23|14][13|23]+x_{1,4}x_{3,1}[23|23]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[12|23]", "[123|134]",
        "-x_{1,3}[123|124]+[12|14][13|23]+x_{1,4}x_{3,1}[12|23]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[23|23]", "[134|134]",
        "-x_{2,3}[134|124]-x_{4,2}[123|134]+x_{4,3}[123|124]+[12|14][34|23]+[23|14][14|23]"
        "-[34|14][12|23]+x_{1,4}x_{4,1}[23|23]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[13|23]", "[234|134]",
        "-x_{1,3}[234|124]+[23|14][14|23]+[34|14][12|23]+x_{2,4}x_{4,1}[13|23]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[23|23]", "[124|124]",
        "-x_{2,3}[134|124]-x_{4,2}[123|134]+x_{1,2}[234|134]+[23|14][14|23]+x_{1,4}x_{4,1}[23|23]",
    ),
    IdentityFixture(
        "4x4 empty-S ideal", 4, 4, "[24|23]", "[123|124]",
        "-x_{4,2}[123|134]+[12|14][34|23]+[23|14][14|23]+x_{1,4}x_{3,1}[24|23]",
    ),
)
