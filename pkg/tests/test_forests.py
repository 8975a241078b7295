from collections import Counter
from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from resatlas.arith import Partition
from resatlas.atlas.reference import parse_sketch
from resatlas.forests import (
    Forest,
    Tree,
    aut_generators,
    aut_order,
    chain,
    complete,
    eliminate_root,
    enumerate_forests,
    enumerate_trees,
    enumerate_weights,
    finals_of,
    galois,
    galois_orbit_and_field,
    group_order,
    inverse_jordan,
    inverse_jordan_trees,
    is_admissible,
    jordan_partition,
    minimal_contraction,
    orbit,
    partitions_of_partition,
    permute,
    shift,
    wedderburn_etherington,
    weight_from_finals,
    weight_orbits,
)

# the 22-node tree whose partition is 8+7+2+2+1+1+1
TREE_22 = "o<(o-o-o<(o-o<(o-o)(o-o))(o))(o-o<(o-o)(o-o<(o)(o-o<(o)(o))))"
# the Galois fixture tree: two ramified children over branches of lengths 2 and 3
C2, C3 = chain(2), chain(3)
GALOIS_TREE = Tree(((C2, C3), (C3, C2)))


def we_oracle(n: int) -> int:
    """a(1) = 1, a(n) = sum_{k<n/2} a(k) a(n-k) (+ a(n/2)(a(n/2)+1)/2 for even n)."""
    a = [0, 1]
    for k in range(2, n + 1):
        s = sum(a[t] * a[k - t] for t in range(1, (k + 1) // 2))
        if k % 2 == 0:
            s += a[k // 2] * (a[k // 2] + 1) // 2
        a.append(s)
    return a[n]


def all_forests(i_max: int):
    for i in range(1, i_max + 1):
        for j in range(1, i + 1):
            yield from enumerate_forests(i, j)


# -- trees and forests ------------------------------------------------------------

@pytest.mark.parametrize("i", range(1, 10))
def test_tree_census(i):
    assert len(enumerate_trees(i)) == we_oracle(i + 1) == wedderburn_etherington(i + 1)


def test_tree_counts_small():
    assert [len(enumerate_trees(i)) for i in range(1, 7)] == [1, 1, 2, 3, 6, 11]
    assert {t.bracket() for t in enumerate_trees(3)} == {"((()))", "(()())"}
    with pytest.raises(ValueError):
        enumerate_trees(0)


def test_forest_counts():
    assert len(enumerate_forests(4, 2)) == 3
    assert len(enumerate_forests(5, 2)) == 5
    assert enumerate_forests(2, 3) == []
    (F,) = enumerate_forests(4, 4)
    assert F.bracket() == "()()()()"


def test_forest_stats():
    F = parse_sketch("o-o<(o)(o) o-o o")
    assert (F.i, F.j, F.l, F.d) == (7, 3, 4, 2)


@given(st.integers(1, 7))
def test_forests_are_canonical_and_distinct(i):
    for j in range(1, i + 1):
        fs = enumerate_forests(i, j)
        assert len({F.encoding() for F in fs}) == len(fs)
        assert all(F.is_canonical() and F.i == i and F.j == j for F in fs)


def test_encoding_invariant_under_child_swap():
    assert Tree(((C2, ()),)).encoding() == Tree((((), C2),)).encoding()
    assert Tree((C2, C3)).canonical() == Tree((C3, C2)).canonical()


@given(st.sampled_from([t for i in range(1, 8) for t in enumerate_trees(i)]))
def test_encoding_invariant_under_random_swaps(T):
    def swap(shape):
        return tuple(swap(c) for c in shape)[::-1]
    assert Tree(swap(T.shape)).encoding() == T.encoding()


def test_aut_order():
    assert aut_order(Tree(chain(4))) == 1
    assert aut_order(Tree(complete(2))) == 8
    assert aut_order(Forest([C2, C2])) == 2


def _aut_group(F):
    """All automorphisms by closing the generators (Burnside oracle helper)."""
    ident = tuple(range(F.i))
    seen = {ident}
    frontier = [ident]
    gens = aut_generators(F)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[p[u]] for u in range(F.i))
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


@pytest.mark.parametrize("F", list(all_forests(6)), ids=lambda F: F.bracket())
def test_aut_order_matches_generated_group(F):
    assert len(_aut_group(F)) == aut_order(F)


# -- weights ---------------------------------------------------------------------

@pytest.mark.parametrize("F", list(all_forests(8)), ids=lambda F: F.bracket())
def test_weight_count(F):
    ws = enumerate_weights(F)
    assert len(ws) == 2 ** (F.i - F.l) == len(set(ws))
    assert all(is_admissible(F, w) for w in ws)


def test_weight_examples():
    assert enumerate_weights(Tree(())) == [(0,)]
    assert len(enumerate_weights(Tree(chain(5)))) == 16
    assert len(enumerate_weights(Tree(complete(2)))) == 2 ** 3


def test_final_node_round_trip():
    for F in all_forests(6):
        for w in enumerate_weights(F):
            assert weight_from_finals(F, finals_of(F, w)) == w


@pytest.mark.parametrize("F", list(all_forests(6)), ids=lambda F: F.bracket())
def test_orbits_partition_weights_burnside(F):
    reps = weight_orbits(F)
    assert sum(n for _, n in reps) == 2 ** (F.i - F.l)
    order = group_order(F)
    assert all(order % n == 0 for _, n in reps)
    # Burnside oracle: average number of fixed points over the whole group
    shifts = product(*[range(1 << t.max_depth) for t in F.trees])
    auts = _aut_group(F)
    ws = enumerate_weights(F)
    fixed = 0
    for g in shifts:
        for p in auts:
            fixed += sum(1 for w in ws if shift(F, g, permute(p, w)) == w)
    assert fixed == len(reps) * order


@pytest.mark.parametrize("T", [t for i in range(1, 8) for t in enumerate_trees(i)], ids=lambda t: t.bracket())
def test_free_action_on_non_contractible_trees(T):
    if minimal_contraction(T)[1] > 0:
        return
    order = group_order(T)
    assert all(n == order for _, n in weight_orbits(T))


@given(st.sampled_from(list(all_forests(6))), st.data())
def test_actions_preserve_admissibility(F, data):
    w = data.draw(st.sampled_from(enumerate_weights(F)))
    g = tuple(data.draw(st.integers(0, 7)) for _ in F.trees)
    gamma = data.draw(st.sampled_from([1, 3, 5, 7]))
    assert is_admissible(F, shift(F, g, w))
    assert is_admissible(F, galois(F, gamma, w))
    for p in aut_generators(F):
        assert is_admissible(F, permute(p, w))
    assert shift(F, (0,) * F.j, w) == tuple(w)
    assert galois(F, 1, w) == tuple(w)


def test_even_galois_element_rejected():
    with pytest.raises(ValueError):
        galois(Tree(C2), 2, (0, 1))


def test_simple_tree_single_orbit():
    for n in range(1, 7):
        assert len(weight_orbits(Tree(chain(n)))) == 1
        w = enumerate_weights(Tree(chain(n)))[-1]
        assert galois_orbit_and_field(Tree(chain(n)), w) == (1, "Q")


def test_non_contractible_orbit_count():
    for i in range(1, 8):
        for T in enumerate_trees(i):
            if minimal_contraction(T)[1] == 0 and aut_order(T) == 1:
                assert len(weight_orbits(T)) == 2 ** (T.size - T.max_depth - T.n_finals)


# -- the Galois example ---------------------------------------------------------------

def test_galois_example():
    T = GALOIS_TREE
    w1 = weight_from_finals(T, (3, 1, 0, 6))
    w2 = weight_from_finals(T, (3, 1, 0, 2))
    assert finals_of(T, galois(T, 15, w1)) == (5, 15, 0, 2)
    assert len(weight_orbits(T)) == 16
    assert galois_orbit_and_field(T, w1) == (4, "Q(4)^+")
    assert galois_orbit_and_field(T, w2) == (8, "Q(4)")


def test_galois_example_tree_size():
    # branches of lengths 2, 3, 3, 2 below two ramified children and the root
    assert GALOIS_TREE.size == 13


def test_pair_over_gaussian_field():
    T = Tree((C3, C2))
    reps = weight_orbits(T)
    assert len(reps) == 2
    assert [galois_orbit_and_field(T, w) for w, _ in reps] == [(2, "Q(2)"), (2, "Q(2)")]


# -- root elimination ------------------------------------------------------------------

def test_eliminate_root_examples():
    G, v = eliminate_root(Tree(C2), (0, 0))
    assert G.bracket() == "()" and v == (0,)
    G, v = eliminate_root(Tree(((), ())), (0, 0, 1))
    assert G.bracket() == "()()" and v == (0, 0)
    with pytest.raises(ValueError):
        eliminate_root(Tree(()), (0,))


@pytest.mark.parametrize("T", [t for i in range(2, 8) for t in enumerate_trees(i)], ids=lambda t: t.bracket())
def test_eliminate_root_two_to_one(T):
    images = Counter()
    for w in enumerate_weights(T):
        G, v = eliminate_root(T, w)
        assert is_admissible(G, v)
        images[(G.encoding(), v)] += 1
    assert set(images.values()) == {2}


# -- contraction ---------------------------------------------------------------------------

def test_minimal_contraction_example():
    T = parse_sketch("o<(o<(o<(o)(o))(o<(o)(o)))(o-o<(o<(o)(o))(o<(o)(o)))").trees[0]
    Tp, gamma = minimal_contraction(T)
    assert gamma == 2
    assert Tp.encoding() == parse_sketch("o<(o<(o)(o))(o-o)").trees[0].encoding()


def test_minimal_contraction_complete_and_simple():
    for k in range(4):
        Tp, gamma = minimal_contraction(Tree(complete(k)))
        assert Tp.size == 1 and gamma == k
    for n in range(1, 6):
        Tp, gamma = minimal_contraction(Tree(chain(n)))
        assert gamma == 0 and Tp == Tree(chain(n))


# -- Jordan partitions -------------------------------------------------------------------

def test_jordan_fixtures():
    F = parse_sketch(TREE_22)
    assert F.i == 22
    assert str(jordan_partition(F)) == "8+7+2+2+1+1+1"
    assert jordan_partition(Tree(chain(3))) == Partition([3])
    assert jordan_partition(Forest([()] * 4)) == Partition([1, 1, 1, 1])


@pytest.mark.parametrize("T", [t for i in range(1, 8) for t in enumerate_trees(i)], ids=lambda t: t.bracket())
def test_jordan_shape(T):
    p = jordan_partition(T)
    assert p.total == T.size
    assert p.parts[0] == T.max_depth + 1
    assert len(p) == T.n_finals


def test_forest_partition_is_union():
    F = Forest([C3, ((), ()), ()])
    assert jordan_partition(F) == Partition([3, 2, 1, 1])


def test_inverse_jordan_counts():
    assert len(inverse_jordan_trees(Partition([5, 4, 3, 2, 1]))) == 15
    assert len(inverse_jordan_trees(Partition([6, 5, 4, 3, 2, 1]))) == 126


@pytest.mark.parametrize("i,d", [(4, 2), (6, 3), (6, 2), (6, 1), (8, 4), (9, 3)])
def test_equal_parts_single_forest(i, d):
    (F,) = inverse_jordan(Partition([d] * (i // d)))
    assert F.j == i // d and all(t.is_simple() and t.size == d for t in F.trees)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


@pytest.mark.parametrize("n", range(1, 8))
def test_inverse_jordan_exact(n):
    """Every forest with n nodes appears in the inverse image of its own partition, and only there."""
    by_sigma = Counter(jordan_partition(F) for F in all_forests_exact(n))
    for parts in _partitions(n):
        sigma = Partition(parts)
        fs = inverse_jordan(sigma)
        assert all(jordan_partition(F) == sigma for F in fs)
        assert len(fs) == len({F.encoding() for F in fs}) == by_sigma[sigma]


def all_forests_exact(n):
    for j in range(1, n + 1):
        yield from enumerate_forests(n, j)


def test_partitions_of_partition():
    assert partitions_of_partition(Partition([3])) == [(Partition([3]), (Partition([3]),))]
    got = partitions_of_partition(Partition([2, 1]))
    assert len(got) == 2
    assert {blocks for _, blocks in got} == {(Partition([1]), Partition([2])), (Partition([2, 1]),)}
    # {1,2} u {3} and {1,3} u {2} coincide when the two last parts are equal
    assert len(partitions_of_partition(Partition([3, 1, 1]))) == 4


def test_partitions_of_partition_count_oracle():
    """Set partitions of the parts up to equal-part symmetry (brute-force oracle)."""
    def oracle(parts):
        def set_parts(xs):
            if not xs:
                yield []
                return
            head, rest = xs[0], xs[1:]
            for sp in set_parts(rest):
                for k in range(len(sp)):
                    yield sp[:k] + [[head] + sp[k]] + sp[k + 1:]
                yield [[head]] + sp
        keys = set()
        for sp in set_parts(list(range(len(parts)))):
            keys.add(tuple(sorted(tuple(sorted((parts[u] for u in b), reverse=True)) for b in sp)))
        return len(keys)
    for parts in ([3, 2, 1], [2, 2, 1], [3, 3, 2, 1], [4, 2, 2, 1, 1], [1, 1, 1, 1]):
        assert len(partitions_of_partition(Partition(parts))) == oracle(parts)
