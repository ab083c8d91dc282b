"""Exit criteria.  Each test carries a ``criterion`` marker; the outcome of every
criterion is listed in the "acceptance criteria" section of the pytest summary.

All arithmetic is exact, so every comparison is equality.
"""
import itertools
import random
import subprocess
import sys
import time

import pytest

from zpr import (
    GeneratorSet,
    Submodule,
    dual,
    extend_p_basis,
    intersect,
    is_p_generator_sequence,
    is_p_independent,
    make_pbasis,
    make_ring,
    p_basis,
    p_coordinates,
    span_membership,
    sum_modules,
)
from zpr.fileformat import load_module
from zpr.module import linear_combination
from zpr.oracle import (
    brute_dual,
    brute_representations,
    brute_sum,
    enumerate_p_span,
    enumerate_span,
)

from corpus import CONFIGS, PAPER_ELEMENTS, PAPER_ROWS, corpus, random_rows

CORPUS_SIZE = 200


def elements(ring, n, rows):
    return set(enumerate_span(GeneratorSet(ring, n, tuple(rows))))


@pytest.fixture(scope="module")
def z8():
    return make_ring(2, 3)


@pytest.mark.criterion("1  paper example: 16 listed elements, |M| = 16, p-dim 4, < 1 s")
def test_paper_example(z8):
    start = time.perf_counter()
    elems = enumerate_span(GeneratorSet(z8, 3, tuple(PAPER_ROWS)))
    m = Submodule.span(z8, 3, PAPER_ROWS)
    assert elems == tuple(sorted(PAPER_ELEMENTS))
    assert m.cardinality == 16
    assert m.p_dimension == 4
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion("2  (4,4,6): four ring representations, one digit representation, < 1 s")
def test_non_uniqueness(z8):
    start = time.perf_counter()
    m = Submodule.span(z8, 3, PAPER_ROWS)
    coeffs = span_membership(m, (4, 4, 6))
    assert coeffs is not None
    assert linear_combination(z8, coeffs, m.generators, 3) == (4, 4, 6)
    reps = brute_representations(z8, PAPER_ROWS, (4, 4, 6))
    assert [a for a, _ in reps] == [6, 6, 6, 6]
    assert sorted(c for _, c in reps) == [1, 3, 5, 7]
    basis = p_basis(m)
    digit_reps = brute_representations(z8, basis.vectors, (4, 4, 6), range(z8.p))
    assert digit_reps == (p_coordinates(basis, (4, 4, 6)),)
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion("3  p-span of the constructed p-basis equals the span (6 configs x 200), < 60 s")
def test_p_span_equals_span():
    start = time.perf_counter()
    count = 0
    for ring, n, rows in corpus(CORPUS_SIZE, seed=3):
        basis = p_basis(Submodule.span(ring, n, rows))
        p_span, _ = enumerate_p_span(ring, n, basis.vectors)
        assert set(p_span) == elements(ring, n, rows)
        count += 1
    assert count == CORPUS_SIZE * len(CONFIGS)
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion("4  digit coordinates are unique and |p-span| = p^pdim")
def test_unique_representation():
    for ring, n, rows in corpus(CORPUS_SIZE, seed=3):
        basis = p_basis(Submodule.span(ring, n, rows))
        p_span, collision = enumerate_p_span(ring, n, basis.vectors)
        assert not collision
        assert len(p_span) == ring.p**basis.pdim


@pytest.mark.criterion("5  |M||M^perp| = p^(rn), pdim(M) + pdim(M^perp) = rn, dual equals brute-force dual")
def test_dual_cardinality_and_dimension():
    for ring, n, rows in corpus(CORPUS_SIZE, seed=3):
        m = Submodule.span(ring, n, rows)
        d = dual(m)
        assert m.cardinality * d.cardinality == ring.p ** (ring.r * n)
        assert m.p_dimension + d.p_dimension == ring.r * n
        brute = brute_dual(sorted(elements(ring, n, rows)), ring, n)
        assert elements(ring, n, d.generators) == set(brute)


@pytest.mark.criterion("6  dual parameters: k(M^perp) = n - k_0, k_0(M^perp) = n - k, k_i(M^perp) = k_(r-i)")
def test_dual_parameters():
    for ring, n, rows in corpus(CORPUS_SIZE, seed=3):
        m = Submodule.span(ring, n, rows)
        k, kd = m.k, dual(m).k
        assert sum(kd) == n - k[0]
        assert kd[0] == n - sum(k)
        for i in range(1, ring.r):
            assert kd[i] == k[ring.r - i]


def _check_extension(ring, n, sub_basis, m, m_elements):
    ext = extend_p_basis(sub_basis, m)
    assert set(sub_basis.vectors) <= set(ext.vectors)
    assert is_p_generator_sequence(ring, ext.vectors)[0]
    assert is_p_independent(ring, ext.vectors)[0]
    p_span, collision = enumerate_p_span(ring, n, ext.vectors)
    assert not collision
    assert set(p_span) == m_elements
    assert len(ext) == m.p_dimension


@pytest.mark.criterion("7  completion: p-bases of N extend to p-bases of M (200 pairs + socle of the paper's M)")
def test_completion(z8):
    rng = random.Random(7)
    pairs = 0
    configs = itertools.cycle(CONFIGS)
    while pairs < CORPUS_SIZE:
        p, r, n = next(configs)
        ring = make_ring(p, r)
        rows = random_rows(rng, ring, n)
        m = Submodule.span(ring, n, rows)
        chain = p_basis(m).vectors
        picked = [v for v in chain if rng.random() < 0.5]
        picked += [linear_combination(ring, [rng.randrange(ring.modulus) for _ in rows], rows, n)
                   for _ in range(rng.randint(0, 2))]
        sub = Submodule.span(ring, n, picked)
        _check_extension(ring, n, p_basis(sub), m, elements(ring, n, rows))
        pairs += 1

    m = Submodule.span(z8, 3, PAPER_ROWS)
    soc_basis = make_pbasis(z8, [(0, 0, 4), (0, 4, 0)])
    _check_extension(z8, 3, soc_basis, m, set(PAPER_ELEMENTS))


@pytest.mark.criterion("8  pdim(M1 + M2) = pdim(M1) + pdim(M2) - pdim(M1 ∩ M2), sum/intersection match enumeration")
def test_sum_dimension():
    rng = random.Random(8)
    configs = itertools.cycle(CONFIGS)
    for _ in range(CORPUS_SIZE):
        p, r, n = next(configs)
        ring = make_ring(p, r)
        rows_a, rows_b = random_rows(rng, ring, n), random_rows(rng, ring, n)
        a, b = Submodule.span(ring, n, rows_a), Submodule.span(ring, n, rows_b)
        s, i = sum_modules(a, b), intersect(a, b)
        assert s.p_dimension == a.p_dimension + b.p_dimension - i.p_dimension
        ea, eb = elements(ring, n, rows_a), elements(ring, n, rows_b)
        assert elements(ring, n, s.generators) == set(brute_sum(sorted(ea), sorted(eb), ring))
        assert elements(ring, n, i.generators) == ea & eb


@pytest.mark.criterion("9  shuffling/duplicating/unit-scaling generators keeps k_i and the module")
def test_presentation_independence():
    rng = random.Random(9)
    configs = itertools.cycle(CONFIGS)
    for _ in range(max(100, CORPUS_SIZE)):
        p, r, n = next(configs)
        ring = make_ring(p, r)
        rows = random_rows(rng, ring, n)
        m = Submodule.span(ring, n, rows)
        units = [u for u in range(1, ring.modulus) if u % p]
        variant = []
        for row in rows:
            u = rng.choice(units)
            variant.append(tuple(u * x % ring.modulus for x in row))
        variant += [rng.choice(variant) for _ in range(rng.randint(0, 2))] if variant else []
        rng.shuffle(variant)
        other = Submodule.span(ring, n, variant)
        assert other.k == m.k
        assert other == m


def _zpr(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "zpr", *args], input=stdin,
                          capture_output=True, text=True, timeout=60)
    return proc.returncode, proc.stdout


@pytest.mark.criterion("10 CLI session on the paper's M: every command, byte-identical reruns, verify exits 0, dual of dual is M")
def test_cli_session(tmp_path):
    m_file = tmp_path / "m.txt"
    m_file.write_text("2 3 3\n2 0 1\n0 4 0\n")
    a_file = tmp_path / "a.txt"
    a_file.write_text("2 3 3\n2 0 1\n")
    b_file = tmp_path / "b.txt"
    b_file.write_text("2 3 3\n0 4 0\n")
    soc_file = tmp_path / "soc.txt"
    soc_file.write_text("2 3 3\n0 0 4\n0 4 0\n")
    m, a, b, soc = map(str, (m_file, a_file, b_file, soc_file))
    session = {
        "standard-form": ["standard-form", m],
        "pbasis": ["pbasis", m],
        "dual": ["dual", m],
        "socle": ["socle", m],
        "member": ["member", m, "4 4 6"],
        "sum": ["sum", a, b],
        "intersect": ["intersect", a, b],
        "extend": ["extend", soc, m],
        "verify": ["verify", m],
        "enumerate": ["enumerate", m],
        "json-standard-form": ["--json", "standard-form", m],
        "json-verify": ["--json", "verify", m],
    }
    outputs = {name: _zpr(*cmd) for name, cmd in session.items()}
    rerun = {name: _zpr(*cmd) for name, cmd in session.items()}
    assert outputs == rerun
    assert all(code == 0 for code, _ in outputs.values())
    assert outputs["verify"][1].splitlines()[-1] == "all identities hold"
    assert outputs["member"][1].splitlines()[-1] == "member: 0 1 1 1"

    code, dual_text = _zpr("dual", m)
    code, double = _zpr("dual", "-", stdin=dual_text)
    assert code == 0
    assert load_module(double) == load_module(m_file.read_text())
    # every module-valued output is valid input again
    for name in ("standard-form", "dual", "socle", "sum", "intersect", "pbasis", "extend", "enumerate"):
        code, _ = _zpr("verify", "-", stdin=outputs[name][1])
        assert code == 0, name
