"""Phase-exact symplectic algebra for n-qubit Pauli operators.

A Pauli operator is stored in the canonical form

    i**phase * prod_q X_q**x_q * Z_q**z_q        (X before Z on every qubit)

with the per-qubit exponents packed into integer bit masks (bit q = qubit q)
and ``phase`` an exponent of i modulo 4.  A qubit with x = z = 1 carries the
bare factor XZ = -iY, so a rendered Y contributes +1 to ``phase`` through
Y = iXZ.  The canonical form is unique: two operators are equal iff all
fields match, which keeps equality, hashing and group arithmetic exact
integer operations with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, ValidationError

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
# Order matters: two-character prefixes must be tried first.
_PREFIXES = (("+i", 1), ("-i", 3), ("+1", 0), ("-1", 2), ("+", 0), ("-", 2), ("i", 1))
_PREFIX_OF = {0: "+", 1: "+i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class Pauli:
    """Immutable n-qubit Pauli operator with exact phase.

    Attributes
    ----------
    n : int
        Qubit count.
    x, z : int
        Bit masks of the X / Z exponents (bit q = qubit q).
    phase : int
        Exponent of i in the canonical form, reduced mod 4.
    """

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("qubit count must be >= 0")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValidationError(f"mask has bits outside {self.n} qubits")
        object.__setattr__(self, "phase", self.phase % 4)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls, n: int) -> "Pauli":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "Pauli":
        """Hermitian single-qubit ``letter`` at ``qubit`` with a +1 prefix."""
        if not 0 <= qubit < n:
            raise ValidationError(f"qubit {qubit} out of range for n={n}")
        try:
            xb, zb = _LETTER_BITS[letter]
        except KeyError:
            raise ValidationError(f"unknown Pauli letter {letter!r}") from None
        return cls(n, xb << qubit, zb << qubit, xb & zb)

    @classmethod
    def hermitian(cls, n: int, x: int, z: int) -> "Pauli":
        """The Hermitian representative with a +1 prefix for the given masks."""
        return cls(n, x, z, (x & z).bit_count())

    @classmethod
    def from_string(cls, text: str) -> "Pauli":
        """Parse ``[prefix]LETTERS`` where prefix is one of +, -, +i, -i.

        The first letter is qubit 0.  A missing prefix means +1.
        """
        body = text.strip()
        prefix = 0
        for token, ph in _PREFIXES:
            if body.startswith(token):
                prefix, body = ph, body[len(token):]
                break
        x = z = ycount = 0
        for q, ch in enumerate(body):
            try:
                xb, zb = _LETTER_BITS[ch]
            except KeyError:
                raise ValidationError(f"invalid Pauli letter {ch!r} in {text!r}") from None
            x |= xb << q
            z |= zb << q
            ycount += xb & zb
        return cls(len(body), x, z, (prefix + ycount) % 4)

    # ------------------------------------------------------------------
    # algebra

    def __mul__(self, other: "Pauli") -> "Pauli":
        """Operator product with exact phase.

        Per qubit, (X^a Z^b)(X^c Z^d) = (-1)^(b*c) X^(a^c) Z^(b^d); the signs
        accumulate as 2 * |z_self & x_other| in the i-exponent.
        """
        if not isinstance(other, Pauli):
            return NotImplemented
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} != {other.n}")
        phase = self.phase + other.phase + 2 * (self.z & other.x).bit_count()
        return Pauli(self.n, self.x ^ other.x, self.z ^ other.z, phase)

    def commutes(self, other: "Pauli") -> bool:
        """True iff the symplectic inner product of the two operators is even."""
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} != {other.n}")
        overlap = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return overlap % 2 == 0

    def __neg__(self) -> "Pauli":
        return Pauli(self.n, self.x, self.z, self.phase + 2)

    def scaled_by_i(self, power: int = 1) -> "Pauli":
        """The operator multiplied by i**power."""
        return Pauli(self.n, self.x, self.z, self.phase + power)

    def adjoint(self) -> "Pauli":
        """Hermitian conjugate; masks are unchanged, only the phase moves."""
        return Pauli(self.n, self.x, self.z, 2 * self.y_count() - self.phase)

    # ------------------------------------------------------------------
    # queries

    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return (self.x | self.z).bit_count()

    def y_count(self) -> int:
        return (self.x & self.z).bit_count()

    def is_hermitian(self) -> bool:
        """Decidable from the fields alone: phase parity must match the Y count."""
        return (self.phase - self.y_count()) % 2 == 0

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def support(self) -> tuple[int, ...]:
        occ = self.x | self.z
        return tuple(q for q in range(self.n) if (occ >> q) & 1)

    def prefix_exponent(self) -> int:
        """Exponent k of the rendered prefix i**k relative to the I/X/Y/Z letters."""
        return (self.phase - self.y_count()) % 4

    def symplectic(self) -> int:
        """The x and z masks packed into a single 2n-bit integer (x low, z high)."""
        return self.x | (self.z << self.n)

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[(self.x >> qubit) & 1, (self.z >> qubit) & 1]

    # ------------------------------------------------------------------
    # rendering

    def __str__(self) -> str:
        letters = "".join(self.letter(q) for q in range(self.n))
        return _PREFIX_OF[self.prefix_exponent()] + letters

    def __repr__(self) -> str:
        return f"Pauli({str(self)!r})"
