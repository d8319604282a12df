"""Hermitian Pauli algebra E(a,b) with exact eighth-root-of-unity phases.

An operator is zeta_8^phase * E(a,b) where E(a,b) is the Hermitian Pauli
with X-part a and Z-part b (binary masks, coordinate 1 = LSB) and
zeta_8 = exp(i*pi/4).  Products of Hermitian Paulis only ever need phases
that are powers of zeta_8, so the phase exponent lives in Z_8.

Integer vectors a, b are admitted through ``PauliOp.from_vectors``, which
folds the mod-2 reduction into the phase:
E(a,b) = i^(a.b - a0.b0) E(a0, b0) with a0 = a mod 2, b0 = b mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import mask_from_string, parity


@dataclass(frozen=True)
class PauliOp:
    """zeta_8^phase * E(x, z) on n qubits, x and z binary masks."""

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError("mask does not fit the qubit count")
        object.__setattr__(self, "phase", self.phase % 8)

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_vectors(
        cls, a: Sequence[int], b: Sequence[int], phase: int = 0
    ) -> "PauliOp":
        """Normalize integer vectors a, b into a binary-mask operator."""
        if len(a) != len(b):
            raise ValueError("vector length mismatch")
        n = len(a)
        dot = sum(ai * bi for ai, bi in zip(a, b))
        x = z = 0
        dot0 = 0
        for i, (ai, bi) in enumerate(zip(a, b)):
            ai &= 1
            bi &= 1
            x |= ai << i
            z |= bi << i
            dot0 += ai & bi
        return cls(n, x, z, phase + 2 * ((dot - dot0) % 4))

    @classmethod
    def from_strings(cls, x: str, z: str, sign: int = 1) -> "PauliOp":
        if len(x) != len(z):
            raise ValueError("string length mismatch")
        return cls(len(x), mask_from_string(x), mask_from_string(z),
                   0 if sign == 1 else 4)

    def is_hermitian(self) -> bool:
        return self.phase in (0, 4)

    @property
    def sign(self) -> int:
        """+1 or -1 for a Hermitian operator."""
        if self.phase == 0:
            return 1
        if self.phase == 4:
            return -1
        raise ValueError(f"phase zeta_8^{self.phase} is not a sign")

    def adjoint(self) -> "PauliOp":
        return PauliOp(self.n, self.x, self.z, -self.phase)

    def multiply(self, other: "PauliOp") -> "PauliOp":
        """Exact group product, result normalized to binary masks."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        a, b, c, d = self.x, self.z, other.x, other.z
        iexp = ((b & c).bit_count() - (a & d).bit_count()) % 4
        corr = parity((a ^ c) & b & d) + parity((b ^ d) & a & c)
        return PauliOp(
            self.n,
            a ^ c,
            b ^ d,
            self.phase + other.phase + 2 * iexp + 4 * corr,
        )

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return self.multiply(other)

    def symplectic_inner(self, other: "PauliOp") -> int:
        """0 iff the operators commute."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return parity(self.x & other.z) ^ parity(self.z & other.x)

    def commutes_with(self, other: "PauliOp") -> bool:
        return self.symplectic_inner(other) == 0

    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return (self.x | self.z).bit_count()

    def label(self) -> str:
        """Render as e.g. '-Z1Z2', '+iX1Y3', '+I'."""
        prefix = {0: "+", 2: "+i", 4: "-", 6: "-i"}.get(self.phase)
        if prefix is None:
            prefix = f"z8^{self.phase} "
        body = ""
        for i in range(self.n):
            xi = (self.x >> i) & 1
            zi = (self.z >> i) & 1
            if xi or zi:
                body += "XZY"[xi + 2 * zi - 1] + str(i + 1)
        return prefix + (body or "I")

    def __str__(self) -> str:
        return self.label()


def symplectic_inner(p: PauliOp, q: PauliOp) -> int:
    return p.symplectic_inner(q)


def multiply(p: PauliOp, q: PauliOp) -> PauliOp:
    return p.multiply(q)
