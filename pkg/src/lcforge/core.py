"""Periodic binary sequences and their linear complexity.

One period of a 2^n-periodic binary sequence is packed into a Python
integer: bit i of the integer is the sequence element at position i, so
position 0 sits in the least significant bit.  Read as a polynomial over
GF(2) the same integer is s_0 + s_1*x + ... + s_{N-1}*x^{N-1}, which
makes sequence addition a single XOR and keeps the synthetic-division
complexity oracle cheap on big integers.

Two independent routes to the linear complexity are provided:
games_chan_lc (iterative period halving) and lc_by_minimal_polynomial
(multiplicity of 1 as a root of the period polynomial).  They share no
code, so each one can vouch for the other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    CannotHalve,
    InvalidDigit,
    InvalidPeriod,
    InvalidSupport,
    LemmaPreconditionViolated,
    PeriodMismatch,
    TooLarge,
)

# One period is 2^MAX_EXPONENT bits at most; beyond this, single-sequence
# operations stop being interactive.
MAX_EXPONENT = 20

# Full per-value lookup tables stop at 2^16 entries.
TABLE_MAX_EXPONENT = 4

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a 2^n-periodic binary sequence, packed LSB-first."""

    exponent: int
    value: int

    def __post_init__(self):
        if not 0 <= self.exponent <= MAX_EXPONENT:
            raise InvalidPeriod(
                f"exponent must be in [0, {MAX_EXPONENT}], got {self.exponent}"
            )
        if not 0 <= self.value < (1 << self.period):
            raise InvalidPeriod("packed value does not fit in one period")

    @property
    def period(self) -> int:
        return 1 << self.exponent

    @classmethod
    def zeros(cls, exponent: int) -> PeriodicSequence:
        """The all-zero sequence of period 2^exponent."""
        return cls(exponent, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> PeriodicSequence:
        """Build from one period given as 0/1 values, position 0 first."""
        items = list(bits)
        exponent = max(0, len(items) - 1).bit_length()
        if len(items) != 1 << exponent:
            raise InvalidPeriod(
                f"period length must be a power of two, got {len(items)}"
            )
        value = 0
        for i, bit in enumerate(items):
            if bit not in (0, 1):
                raise InvalidDigit(f"bit at position {i} is {bit!r}, not 0/1")
            value |= bit << i
        return cls(exponent, value)

    @classmethod
    def from_support(cls, exponent: int, positions: Iterable[int]) -> PeriodicSequence:
        """Build the sequence whose ones sit exactly at the given positions."""
        period = 1 << exponent
        value = 0
        for pos in positions:
            if not 0 <= pos < period:
                raise InvalidSupport(f"position {pos} outside [0, {period})")
            if value >> pos & 1:
                raise InvalidSupport(f"position {pos} listed twice")
            value |= 1 << pos
        return cls(exponent, value)

    def bits(self) -> tuple[int, ...]:
        """One period as a tuple of 0/1 values, position 0 first."""
        return tuple(self.value >> i & 1 for i in range(self.period))

    def support(self) -> tuple[int, ...]:
        """Positions of the ones, strictly increasing."""
        value, out = self.value, []
        while value:
            low = value & -value
            out.append(low.bit_length() - 1)
            value ^= low
        return tuple(out)

    def weight(self) -> int:
        """Number of ones in one period."""
        return self.value.bit_count()

    def __xor__(self, other: PeriodicSequence) -> PeriodicSequence:
        if self.exponent != other.exponent:
            raise PeriodMismatch(
                f"cannot add periods 2^{self.exponent} and 2^{other.exponent}"
            )
        return PeriodicSequence(self.exponent, self.value ^ other.value)


def parse_sequence(text: str, exponent: int) -> PeriodicSequence:
    """Parse one period from text, picking binary or hex by length.

    A string of length 2^n is binary, one character per position with
    position 0 first.  A string of length 2^n / 4 (so exponent >= 2) is
    hex carrying the period most significant bit first: the top bit of
    the first digit is position 0.  The two lengths never coincide, so
    the choice is unambiguous.
    """
    if not 0 <= exponent <= MAX_EXPONENT:
        raise InvalidPeriod(
            f"exponent must be in [0, {MAX_EXPONENT}], got {exponent}"
        )
    period = 1 << exponent
    if len(text) == period:
        return parse_binary(text, exponent)
    if exponent >= 2 and len(text) == period // 4:
        return parse_hex(text, exponent)
    expected = f"{period} binary"
    if exponent >= 2:
        expected += f" or {period // 4} hex"
    raise InvalidPeriod(f"expected {expected} characters, got {len(text)}")


def parse_binary(text: str, exponent: int) -> PeriodicSequence:
    """Parse one period from a 0/1 string, position 0 first."""
    period = 1 << exponent
    if len(text) != period:
        raise InvalidPeriod(f"expected {period} binary characters, got {len(text)}")
    value = 0
    for i, char in enumerate(text):
        if char == "1":
            value |= 1 << i
        elif char != "0":
            raise InvalidDigit(f"character {char!r} at index {i} is not 0/1")
    return PeriodicSequence(exponent, value)


def parse_hex(text: str, exponent: int) -> PeriodicSequence:
    """Parse one period from hex digits, most significant bit first."""
    if exponent < 2:
        raise InvalidPeriod("hex input needs a period of at least 4 bits")
    period = 1 << exponent
    if len(text) != period // 4:
        raise InvalidPeriod(f"expected {period // 4} hex characters, got {len(text)}")
    for i, char in enumerate(text):
        if char not in _HEX_DIGITS:
            raise InvalidDigit(f"character {char!r} at index {i} is not a hex digit")
    # MSB of the hex number is position 0, so reverse the bit order.
    msb_first = format(int(text, 16), f"0{period}b")
    return PeriodicSequence(exponent, int(msb_first[::-1], 2))


def hamming_weight(s: PeriodicSequence) -> int:
    """Number of ones in one period of s."""
    return s.value.bit_count()


def add(a: PeriodicSequence, b: PeriodicSequence) -> PeriodicSequence:
    """Positionwise sum over GF(2) of two sequences with equal periods."""
    return a ^ b


def halve(s: PeriodicSequence) -> PeriodicSequence:
    """Fold one period onto its half: position i becomes left[i] XOR right[i]."""
    if s.exponent == 0:
        raise CannotHalve("period 1 has no halves to fold")
    half = 1 << (s.exponent - 1)
    mask = (1 << half) - 1
    return PeriodicSequence(s.exponent - 1, (s.value & mask) ^ (s.value >> half))


def _lc_value(value: int, exponent: int) -> int:
    """Linear complexity of a packed period value by iterative halving."""
    lc = 0
    for t in range(exponent, 0, -1):
        half = 1 << (t - 1)
        left = value & ((1 << half) - 1)
        right = value >> half
        if left == right:
            value = left
        else:
            lc += half
            value = left ^ right
    return lc + (value & 1)


def games_chan_lc(s: PeriodicSequence) -> int:
    """Linear complexity of s by the Games-Chan halving algorithm.

    At period length 2^t, equal halves mean the complexity lives entirely
    in the half-length sequence; unequal halves contribute 2^(t-1) plus
    the complexity of the XOR of the halves.  A final length-1 period
    contributes its single bit.  The all-zero sequence has complexity 0.
    """
    return _lc_value(s.value, s.exponent)


def _prefix_xor(value: int, width: int) -> int:
    """Running XOR of the low `width` bits of value; width is a power of two."""
    shift = 1
    while shift < width:
        value ^= value << shift
        shift <<= 1
    return value & ((1 << width) - 1)


def lc_by_minimal_polynomial(s: PeriodicSequence) -> int:
    """Linear complexity as 2^n minus the multiplicity of 1 as a root.

    The period polynomial s(x) over GF(2) is divisible by (1 + x) exactly
    when it has an even number of terms, and the quotient under synthetic
    division is the running prefix XOR of the coefficients.  Dividing
    until the term count goes odd counts the multiplicity of the root 1;
    the complexity is the period length minus that multiplicity.  Shares
    no logic with games_chan_lc, so the two cross-check each other.
    """
    value = s.value
    if value == 0:
        return 0
    period = 1 << s.exponent
    multiplicity = 0
    while value.bit_count() % 2 == 0:
        value = _prefix_xor(value, period)
        multiplicity += 1
    return period - multiplicity


def _two_adic(x: int) -> int:
    """Exponent of the largest power of two dividing x (x > 0)."""
    return (x & -x).bit_length() - 1


def lc_pair(i: int, j: int, exponent: int) -> int:
    """Complexity of the period-2^exponent sequence with ones exactly at i < j.

    Closed form: 2^n - 2^d where d is the 2-adic valuation of j - i.
    """
    period = 1 << exponent
    if not 0 <= i < j < period:
        raise InvalidSupport(f"need 0 <= i < j < {period}, got i={i}, j={j}")
    return period - (1 << _two_adic(j - i))


def lc_quad(i: int, j: int, k: int, l: int, exponent: int) -> int:
    """Complexity of the sequence with ones exactly at {i, j, k, l}.

    Closed form for two interleaved pairs: requires the four positions
    distinct and inside one period, with i < j, i < k < l, and k - i odd.
    With d, e the 2-adic valuations of j - i and l - k, the complexity is
    2^n - (2^d + 1) when d == e and 2^n - 2^min(d, e) otherwise.

    One labelling of a support is not covered by the closed form and is
    rejected: both gaps odd (d == e == 0) with their sum divisible by 4.
    There the leading terms of the two pairs cancel further and the
    formula overshoots; regrouping the same four positions into its two
    equal-parity pairs always yields an accepted labelling.
    """
    period = 1 << exponent
    points = (i, j, k, l)
    if len(set(points)) != 4:
        raise LemmaPreconditionViolated(f"positions must be distinct, got {points}")
    if not all(0 <= p < period for p in points):
        raise LemmaPreconditionViolated(f"positions must lie in [0, {period})")
    if not (i < j and i < k < l):
        raise LemmaPreconditionViolated("need i < j and i < k < l")
    if (k - i) % 2 == 0:
        raise LemmaPreconditionViolated(f"k - i must be odd, got {k - i}")
    d = _two_adic(j - i)
    e = _two_adic(l - k)
    if d == e == 0 and ((j - i) + (l - k)) % 4 == 0:
        raise LemmaPreconditionViolated(
            "gaps j - i and l - k both odd with sum divisible by 4:"
            " regroup the pairs by position parity"
        )
    if d == e:
        return period - ((1 << d) + 1)
    return period - (1 << min(d, e))


@lru_cache(maxsize=None)
def lc_table(exponent: int) -> bytes:
    """Linear complexity of every packed period value, as a byte table.

    Entry v is the complexity of PeriodicSequence(exponent, v).  Built
    level by level with the same halving recurrence as games_chan_lc.
    Capped at exponent 4 (65 536 one-byte entries).
    """
    if not 0 <= exponent <= TABLE_MAX_EXPONENT:
        raise TooLarge(
            f"lookup table supports exponent <= {TABLE_MAX_EXPONENT}, got {exponent}"
        )
    table = bytes((0, 1))
    for t in range(1, exponent + 1):
        half = 1 << (t - 1)
        mask = (1 << half) - 1
        prev = table
        out = bytearray(1 << (1 << t))
        for v in range(len(out)):
            left = v & mask
            right = v >> half
            out[v] = prev[left] if left == right else half + prev[left ^ right]
        table = bytes(out)
    return table
