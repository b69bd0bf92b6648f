from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifford_nogo import gf2
from clifford_nogo.codes import (
    CodeError,
    NotPreservingError,
    StabilizerCode,
    encoding_matrix,
    format_code,
    load_code,
    logical_action,
    parse_code_text,
    permute_qubits,
    preserves_code,
    standard_form,
    validate_code,
)
from clifford_nogo.gadgets import permutation_matrix, transversal
from clifford_nogo.symplectic import M_H, PauliVec, SymplecticMatrix, _sp, element_order, pauli_print

from helpers import CORPUS, corpus_code, preserving_gadgets, random_codes

SMALL = ["code_422", "code_513", "code_622", "steane", "trivial_1"]


def check_standard_form(code: StabilizerCode) -> None:
    n, r, k = code.n, code.r, code.k
    sf = standard_form(code)
    assert sorted(sf.permutation) == list(range(n))
    # same code after undoing the qubit permutation
    back = [permute_qubits(v, sf.permutation, n) for v in sf.generators]
    assert gf2.rank(list(code.generators) + back) == r
    # reduced shape: identity on the first x_rank X-columns
    for i in range(sf.x_rank):
        assert sf.generators[i] & ((1 << n) - 1) & ((1 << sf.x_rank) - 1) == 1 << i
    for i in range(sf.x_rank, r):
        assert sf.generators[i] & ((1 << n) - 1) == 0
    lx, lz, d, s = sf.logical_x, sf.logical_z, sf.destabilizers, code.generators
    for i in range(k):
        for j in range(k):
            assert _sp(lx[i], lz[j], n) == (i == j)
            assert _sp(lx[i], lx[j], n) == 0
            assert _sp(lz[i], lz[j], n) == 0
        for g in s:
            assert _sp(lx[i], g, n) == 0 and _sp(lz[i], g, n) == 0
        # logical Z lives on the Z half only
        assert lz[i] & ((1 << n) - 1) == 0
    for i in range(r):
        for j in range(r):
            assert _sp(d[i], s[j], n) == (i == j)
            assert _sp(d[i], d[j], n) == 0
        for v in lx + lz:
            assert _sp(d[i], v, n) == 0
    assert gf2.rank(list(s) + list(lx) + list(lz) + list(d)) == 2 * n


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_standard_form_invariants_on_corpus(name):
    check_standard_form(corpus_code(name))


@settings(max_examples=120, deadline=None)
@given(random_codes())
def test_standard_form_invariants_random(code):
    check_standard_form(code)
    encoding_matrix(code)  # constructs without raising


def test_steane_logicals():
    sf = standard_form(corpus_code("steane"))
    (lz,) = sf.logical_z
    assert pauli_print(PauliVec(7, sf.to_standard_frame(lz))) == "ZIZIIIZ"


def test_validate_errors():
    with pytest.raises(CodeError, match="anticommute"):
        validate_code(["XI", "ZI"])
    with pytest.raises(CodeError, match="depends"):
        validate_code(["XX", "ZZ", "YY"])
    with pytest.raises(CodeError, match="qubits"):
        validate_code(["XX", "ZZZ"])
    with pytest.raises(CodeError):
        validate_code([1, 2])
    code = validate_code(np.array([[1, 1, 0, 0], [0, 0, 1, 1]]))
    assert code.k == 0


def test_code_text_round_trip_and_errors(tmp_path):
    for name in CORPUS:
        code = corpus_code(name)
        again = parse_code_text(format_code(code))
        assert again == code and again.distance == code.distance
    with pytest.raises(CodeError, match=":3:"):
        parse_code_text("name=x\nXX\nXQ\n")
    with pytest.raises(CodeError, match="unknown header"):
        parse_code_text("q=1\nXX\n")
    with pytest.raises(CodeError, match="anticommute"):
        parse_code_text("XI\nZI\n")
    p = tmp_path / "c.txt"
    p.write_text("n=3\n")
    assert load_code(p).k == 3


def test_preserves_code_examples():
    steane = corpus_code("steane")
    assert preserves_code(transversal(["H"] * 7), steane)
    assert preserves_code(transversal(["S"] * 7), steane)
    assert not preserves_code(transversal(["H"] + ["I"] * 6), steane)
    c422 = corpus_code("code_422")
    assert preserves_code(transversal(["H"] * 4), c422)
    assert preserves_code(permutation_matrix((1, 0, 2, 3)), c422)
    with pytest.raises(ValueError):
        preserves_code(transversal(["H"] * 3), c422)


def test_transversal_h_on_steane_is_logical_h():
    steane = corpus_code("steane")
    assert logical_action(transversal(["H"] * 7), steane) == M_H
    # transversal S acts as S^dagger = S (projectively) up to the basis choice
    L = logical_action(transversal(["S"] * 7), steane)
    assert element_order(L) == 2


def test_logical_action_rejects_non_preserving():
    with pytest.raises(NotPreservingError):
        logical_action(transversal(["H", "I", "I", "I"]), corpus_code("code_422"))


def test_identity_acts_trivially():
    for name in SMALL:
        code = corpus_code(name)
        if code.k:
            assert logical_action(SymplecticMatrix.identity(code.n), code).is_identity()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_constructed_gadget_has_prescribed_logical_action(name, data):
    code = corpus_code(name)
    M, L = data.draw(preserving_gadgets(code))
    assert preserves_code(M, code)
    assert logical_action(M, code) == L


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_logical_order_divides_physical_order(name, data):
    code = corpus_code(name)
    M, _ = data.draw(preserving_gadgets(code))
    assert element_order(M) % element_order(logical_action(M, code)) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_logical_action_is_homomorphism(name, data):
    code = corpus_code(name)
    A, _ = data.draw(preserving_gadgets(code))
    B, _ = data.draw(preserving_gadgets(code))
    assert logical_action(A @ B, code) == logical_action(A, code) @ logical_action(B, code)


@settings(max_examples=40, deadline=None)
@given(random_codes(max_n=5), st.data())
def test_homomorphism_on_random_codes(code, data):
    if code.k == 0:
        return
    A, LA = data.draw(preserving_gadgets(code))
    B, LB = data.draw(preserving_gadgets(code))
    assert logical_action(A @ B, code) == LA @ LB


@pytest.mark.parametrize("name", ["code_422", "code_513", "code_622", "steane"])
def test_qubit_permutations_keep_logical_z_commuting(name):
    code = corpus_code(name)
    sf = standard_form(code)
    n = code.n
    perms = itertools.permutations(range(n)) if n <= 6 else itertools.islice(itertools.permutations(range(n)), 2000)
    seen = 0
    for perm in perms:
        P = permutation_matrix(perm)
        if not preserves_code(P, code):
            continue
        seen += 1
        L = logical_action(P, code)
        for i in range(code.k):
            z = 1 << (code.k + i)
            assert _sp(L.apply(z), z, code.k) == 0
        for z in sf.logical_z:
            assert _sp(P.apply(z), z, n) == 0
    assert seen >= 1
