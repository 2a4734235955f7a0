"""p-blocks of irreducible characters via central-character congruences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import CharacterTable
from .cyclo.embedding import IdealEmbedding, ideal_embed
from .cyclo.field import Cyclotomic, is_algebraic_integer
from .errors import NotIntegral


@dataclass(frozen=True)
class CentralCharacter:
    index: int  # row of the character table
    omega: tuple[Cyclotomic, ...]


@dataclass(frozen=True)
class Block:
    p: int
    members: tuple[int, ...]
    defect: int
    heights: tuple[int, ...]  # aligned with members
    principal: bool = False

    def height_of(self, i: int) -> int:
        return self.heights[self.members.index(i)]

    def to_dict(self, table: CharacterTable) -> dict:
        return {
            "p": self.p,
            "defect": self.defect,
            "principal": self.principal,
            "members": [
                {"index": i, "degree": table[i].degree, "height": h}
                for i, h in zip(self.members, self.heights)
            ],
        }


def valuation(m: int, p: int) -> int:
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def central_characters(table: CharacterTable) -> list[CentralCharacter]:
    sizes = table.classes.sizes
    out = []
    for i, chi in enumerate(table):
        d = chi.degree
        omega = tuple((v * s).scale(Fraction(1, d)) for v, s in zip(chi.values, sizes))
        for w in omega:
            if not is_algebraic_integer(w):
                raise NotIntegral(f"central character value {w} of character {i} is not integral")
        out.append(CentralCharacter(i, omega))
    return out


def block_partition(table: CharacterTable, p: int, *, choice: int = 0) -> list[Block]:
    """Blocks ordered by smallest member; the principal block comes first.

    ``choice`` selects which maximal ideal over p is used (index into the
    sorted irreducible factors); the partition does not depend on it.
    """
    G = table.group
    emb = IdealEmbedding.build(p, G.exponent, choice)
    groups: dict[tuple, list[int]] = {}
    for cc in central_characters(table):
        key = tuple(ideal_embed(w, emb) for w in cc.omega)
        groups.setdefault(key, []).append(cc.index)

    a = valuation(G.n, p)
    triv = table.trivial_index
    blocks = []
    for members in sorted(groups.values(), key=min):
        vals = [valuation(table[i].degree, p) for i in members]
        d = a - min(vals)
        heights = tuple(v - (a - d) for v in vals)
        blocks.append(Block(p, tuple(members), d, heights, triv in members))
    blocks.sort(key=lambda b: (not b.principal, b.members[0]))
    return blocks


def principal_block(blocks: list[Block]) -> Block:
    return next(b for b in blocks if b.principal)


def height_zero_members(block: Block) -> list[int]:
    return [i for i, h in zip(block.members, block.heights) if h == 0]


def principal_block_is_quotient_lift(table: CharacterTable, B0: Block, K) -> bool:
    """With K a normal p-complement, Irr(B0) should be exactly the inflations of Irr(G/K)."""
    from .chartab import character_table, inflate
    from .group import quotient

    Q, proj = quotient(table.group, K)
    lifted = {inflate(chi, table.group, proj).values for chi in character_table(Q)}
    return lifted == {table[i].values for i in B0.members}
