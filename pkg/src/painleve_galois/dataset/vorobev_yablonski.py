"""Table of Vorobev-Yablonski polynomials and the per-index facts checked on them."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from painleve_galois.common.exceptions import DomainError
from painleve_galois.common.polynomial import ONE, Polynomial


@dataclass
class VorobevYablonskiTable:
    """Append-only table `Q_0, Q_1, ...` seeded with `Q_0 = Q_1 = 1`.

    Growth happens under a lock; entries already stored never change, so readers only
    ever see a consistent prefix.

    Attributes:
        max_n (int): deepest index the table may hold
    """

    max_n: int = 16
    _entries: list[Polynomial] = field(default_factory=lambda: [ONE, ONE])
    _lock: threading.Lock = field(
        default_factory=threading.Lock, repr=False, compare=False
    )

    def __len__(self: VorobevYablonskiTable) -> int:
        """Number of stored entries.

        Returns:
            int: the stored prefix length
        """
        return len(self._entries)

    def __getitem__(self: VorobevYablonskiTable, n: int) -> Polynomial:
        """Stored entry `Q_n`.

        Args:
            n (int): index below `len(self)`

        Returns:
            Polynomial: the entry
        """
        return self._entries[n]

    @property
    def lock(self: VorobevYablonskiTable) -> threading.Lock:
        """Lock serializing growth.

        Returns:
            threading.Lock: the growth lock
        """
        return self._lock

    def check_index(self: VorobevYablonskiTable, n: int) -> None:
        """Reject indices outside `0..max_n + 1`.

        The entry `Q_{max_n + 1}` is admitted because `w(z, max_n)` needs it.

        Args:
            n (int): requested index

        Raises:
            DomainError: when `n` is negative or too deep
        """
        if n < 0:
            raise DomainError(f"Polynomial index must be nonnegative, got {n}")
        if n > self.max_n + 1:
            raise DomainError(
                f"Polynomial index {n} exceeds the table limit {self.max_n + 1}"
            )

    def append(self: VorobevYablonskiTable, entry: Polynomial) -> None:
        """Store the next entry; callers hold `lock`.

        Args:
            entry (Polynomial): `Q_{len(self)}`
        """
        self._entries.append(entry)

    def snapshot(self: VorobevYablonskiTable) -> tuple[Polynomial, ...]:
        """Immutable copy of the stored prefix.

        Returns:
            tuple[Polynomial, ...]: entries `Q_0 .. Q_{len - 1}`
        """
        return tuple(self._entries)


@dataclass(frozen=True)
class HierarchyInvariants:
    """Facts established for one index of the table.

    Attributes:
        parameter_n (int): index `n`
        degree (int): degree of `Q_n`
        expected_degree (int): `n(n - 1)/2`
        monic (bool): leading coefficient is 1
        simple_roots (bool): `gcd(Q_n, Q_n') = 1`
        coprime_with_next (bool): `gcd(Q_n, Q_{n+1}) = 1`
        integer_coefficients (bool): observed integrality, recorded only
    """

    parameter_n: int
    degree: int
    expected_degree: int
    monic: bool
    simple_roots: bool
    coprime_with_next: bool
    integer_coefficients: bool

    @property
    def holds(self: HierarchyInvariants) -> bool:
        """Whether every asserted invariant holds; integrality is not asserted.

        Returns:
            bool: True when degree, monicity, simple roots and coprimality all hold
        """
        return (
            self.degree == self.expected_degree
            and self.monic
            and self.simple_roots
            and self.coprime_with_next
        )
