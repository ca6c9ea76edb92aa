"""Size-bound checkers for pairs, the equality-case classifier, and the
generalized conjecture test."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_key
from .family import BspPair, product_matrix


@dataclass(frozen=True)
class BoundReport:
    name: str
    product: int
    bound: int
    applicable: bool
    passed: bool
    equality: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "product": self.product,
            "bound": self.bound,
            "applicable": self.applicable,
            "pass": self.passed,
            "equality": self.equality,
        }


def check_product_bound(p: BspPair) -> BoundReport:
    """|A| |B| <= (d+1) 2^d for spanning pairs with binary products."""
    d = p.dim
    bound = (d + 1) << d
    prod = p.product()
    return BoundReport("product-bound", prod, bound, True, prod <= bound, prod == bound)


def check_large_pair_bound(p: BspPair) -> BoundReport:
    """|A| |B| <= d 2^d + 2d, applicable when both sizes are >= d+2."""
    d = p.dim
    bound = (d << d) + 2 * d
    prod = p.product()
    applicable = len(p.family_a) >= d + 2 and len(p.family_b) >= d + 2
    return BoundReport(
        "large-pair-bound",
        prod,
        bound,
        applicable,
        (prod <= bound) if applicable else True,
        applicable and prod == bound,
    )


# spec names the theorems by number; keep those spellings on the API
check_thm4 = check_product_bound
check_thm3 = check_large_pair_bound


@dataclass(frozen=True)
class EqualityClassification:
    is_equality_case: bool
    cube_side: str | None  # "a", "b" or None
    sizes: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "equality_case": self.is_equality_case,
            "cube_side": self.cube_side,
            "size_a": self.sizes[0],
            "size_b": self.sizes[1],
        }


def check_thm6_equality(p: BspPair) -> EqualityClassification:
    """When |A||B| = (d+1) 2^d, one family has size d+1 and the other is a
    cube: its product matrix with the small side must be permutation
    equivalent to the reference cube-pair matrix."""
    d = p.dim
    sizes = p.sizes()
    if p.product() != (d + 1) << d:
        return EqualityClassification(False, None, sizes)
    assert sorted(sizes) == [d + 1, 1 << d], f"equality case with sizes {sizes}"
    from .constructions import construct_example

    ref = canonical_key(product_matrix(construct_example("cube-pair", d)), include_transpose=True)
    got = canonical_key(product_matrix(p), include_transpose=True)
    assert got == ref, "equality case not isomorphic to the cube pair"
    cube_side = "a" if sizes[0] == (1 << d) else "b"
    return EqualityClassification(True, cube_side, sizes)


@dataclass(frozen=True)
class ConjectureViolation:
    sizes: tuple[int, int]
    k: int
    threshold: int  # both sizes must exceed 2^(k-1) (d-k+2) for the bound to apply
    bound: int
    product: int

    def to_json(self) -> dict:
        return {
            "size_a": self.sizes[0],
            "size_b": self.sizes[1],
            "k": self.k,
            "bound": self.bound,
            "product": self.product,
        }


def check_conjecture1(sizes: list[tuple[int, int]], d: int) -> list[ConjectureViolation]:
    """For each size pair and each k in [0, d]: if both sizes exceed
    2^(k-1) (d-k+2) then the product must be at most (2^(d-k)+k) 2^k (d-k+1).
    Returns all violations (empty list = holds on the input).

    The k=0 threshold is the half-integer (d+2)/2; the comparison is done
    with doubled integers to stay exact.
    """
    out = []
    for m, n in sizes:
        for k in range(d + 1):
            # min(m, n) > 2^(k-1) (d-k+2), scaled by 2 to avoid fractions
            if 2 * min(m, n) <= (1 << k) * (d - k + 2):
                continue
            bound = ((1 << (d - k)) + k) * (1 << k) * (d - k + 1)
            if m * n > bound:
                out.append(
                    ConjectureViolation(
                        (m, n), k, (1 << k) * (d - k + 2), bound, m * n
                    )
                )
    return out
