"""Radical-ideal certificates from squarefree univariate members.

If an ideal of ``K[A, B]`` contains ``f_A`` in ``K[A]`` and ``f_B`` in ``K[B]``
with ``gcd(f_A, f_A') = gcd(f_B, f_B') = 1``, the ideal is radical and its
quotient has no nilpotents.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from arith import DomainError, MPoly, UniPoly, UsageError
from ssalg.certificate import Certificate, MembershipWitness, Verdict
from ssalg.elimination import elimination_resultant
from ssalg.errors import MembershipError
from ssalg.univariate import is_semisimple_univariate

logger = logging.getLogger(__name__)


def _check_member(ideal: Sequence[MPoly], witness: MembershipWitness, var: str) -> UniPoly:
    if len(witness.generators) != len(ideal) or any(
        g != h for g, h in zip(witness.generators, ideal)
    ):
        raise MembershipError(f"Witness for {witness.label or var} uses other generators")
    if not witness.holds():
        raise MembershipError(
            f"{witness.target.to_text()} is not the stated combination of the generators"
        )
    try:
        return UniPoly.from_mpoly(witness.target, var)
    except (UsageError, DomainError) as e:
        raise MembershipError(f"Member for {var} is not univariate: {e}") from e


def seidenberg_radical_check(
    ideal: Sequence[MPoly],
    f_a: MembershipWitness,
    f_b: MembershipWitness,
    avoid: Iterable[MPoly] = (),
    avoid_b: Iterable[MPoly] | None = None,
) -> Certificate:
    """Verify both memberships exactly, then certify both members squarefree.

    ``avoid_b`` defaults to ``avoid``; the two sides may carry different
    declared nonzero loci when the ideal is only symmetric up to relabeling.
    """
    if len(ideal) != 2:
        raise UsageError("Expected an ideal with two generators")
    system = ideal[0].system
    if len(system.generators) != 2:
        raise UsageError(f"Expected two generators, got {system.generators}")
    var_a, var_b = system.generators
    loci_a = tuple(avoid)
    loci_b = loci_a if avoid_b is None else tuple(avoid_b)
    p_a = _check_member(ideal, f_a, var_a)
    p_b = _check_member(ideal, f_b, var_b)
    if p_a.degree() < 1 or p_b.degree() < 1:
        return Certificate(
            Verdict.INCONCLUSIVE,
            _subject(ideal),
            membership=(f_a, f_b),
            note="a member is constant; the quotient is zero",
        )
    part_a = is_semisimple_univariate(p_a, loci_a)
    part_b = is_semisimple_univariate(p_b, loci_b)
    parts = (part_a, part_b)
    if all(p.verdict is Verdict.SEMISIMPLE for p in parts):
        logger.info("Radical ideal certified for %s", _subject(ideal))
        return Certificate(
            Verdict.RADICAL_IDEAL, _subject(ideal), membership=(f_a, f_b), parts=parts
        )
    return Certificate(
        Verdict.INCONCLUSIVE,
        _subject(ideal),
        membership=(f_a, f_b),
        parts=parts,
        note="a univariate member was not certified squarefree",
    )


def radical_certificate(ideal: Sequence[MPoly], avoid: Iterable[MPoly] = ()) -> Certificate:
    """Seidenberg's check with members obtained by elimination.

    A generator that already involves a single generator serves as its own member.
    """
    system = ideal[0].system
    var_a, var_b = system.generators
    loci = tuple(avoid)
    g1, g2 = ideal
    members = []
    for keep, drop in ((var_a, var_b), (var_b, var_a)):
        own = _own_member(ideal, keep, drop)
        if own is not None:
            members.append(own)
        else:
            members.append(elimination_resultant(g1, g2, drop)[1])
    return seidenberg_radical_check(ideal, members[0], members[1], loci)


def _own_member(ideal: Sequence[MPoly], keep: str, drop: str) -> MembershipWitness | None:
    zero = MPoly.zero(ideal[0].system)
    one = MPoly.one(ideal[0].system)
    for i, g in enumerate(ideal):
        if g and drop not in g.variables_used() and keep in g.variables_used():
            multipliers = tuple(one if j == i else zero for j in range(len(ideal)))
            return MembershipWitness(g, tuple(ideal), multipliers, f"generator {i + 1}")
    return None


def _subject(ideal: Sequence[MPoly]) -> str:
    return "(" + ", ".join(g.to_text() for g in ideal) + ")"
