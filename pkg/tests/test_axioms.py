"""Axiom checkers, positivity conditions, classification, cross-checks."""

import pytest

from degraphs.axioms import (
    check_axiom,
    check_axiom4a,
    check_axiom4b,
    check_lsf,
    check_lsp,
    classify_small_component,
    is_locally_schur_positive,
)
from degraphs.combinatorics import enumerate_partitions
from degraphs.fixtures import fixture
from degraphs.graph import SignedColoredGraph
from degraphs.standard import build_standard_deg
from degraphs.structure import defect_sets

from conftest import corpus


class TestAxiomsOnStandard:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_g32_passes(self, k):
        assert check_axiom(build_standard_deg((3, 2)), k).holds

    def test_all_axioms_small(self):
        for n in range(1, 7):
            for lam in enumerate_partitions(n):
                G = build_standard_deg(lam)
                for k in range(1, 7):
                    assert check_axiom(G, k).holds, (lam, k)


class TestAxiomFailures:
    def test_fig6_fails_only_axiom6(self):
        G = fixture("fig6")
        for k in range(1, 6):
            assert check_axiom(G, k).holds, k
        rep = check_axiom(G, 6)
        assert not rep.holds and rep.witnesses

    def test_broken_axiom1(self):
        G = SignedColoredGraph(3, 3, {"a": (1, -1), "b": (-1, 1), "c": (1, -1)}, [(2, "a", "b")])
        rep = check_axiom(G, 1)
        assert not rep.holds
        assert any(w[1] == "c" for w in rep.witnesses)

    def test_broken_axiom2(self):
        G = SignedColoredGraph(
            3, 5, {"a": (1, -1, 1, 1), "b": (-1, 1, 1, -1)}, [(2, "a", "b")]
        )
        assert not check_axiom(G, 2).holds  # position 4 must be preserved

    def test_axiom5_commutation(self):
        sig = {
            "a": (1, -1, 1, 1, -1),
            "b": (-1, 1, 1, 1, -1),
            "c": (1, -1, 1, -1, 1),
            "d": (-1, 1, 1, -1, 1),
        }
        good = SignedColoredGraph(
            6, 6, sig, [(2, "a", "b"), (5, "a", "c"), (5, "b", "d"), (2, "c", "d")]
        )
        assert check_axiom(good, 5).holds
        bad = SignedColoredGraph(6, 6, sig, [(2, "a", "b"), (5, "a", "c")])
        assert not check_axiom(bad, 5).holds


class TestLSF:
    def test_g32_multiplicity_free(self):
        G = build_standard_deg((3, 2))
        assert check_lsf(G, 4).holds

    def test_fig4a_fails(self):
        rep = check_lsf(fixture("fig4a"), 4)
        assert not rep.holds

    def test_fig8_fails_lsf4(self):
        assert not check_lsf(fixture("fig8"), 4).holds

    def test_fig8_is_lsp(self):
        for m in (4, 5, 6):
            assert check_lsp(fixture("fig8"), m).holds

    def test_fig19_fails_lsp6(self):
        G = fixture("fig19")
        assert check_lsp(G, 4).holds
        assert check_lsp(G, 5).holds
        assert not check_lsp(G, 6).holds

    def test_single_vertex_vacuous(self):
        G = SignedColoredGraph(6, 6, {"v": (1, 1, 1, 1, 1)}, [])
        for m in (4, 5, 6):
            assert check_lsp(G, m).holds and check_lsf(G, m).holds


class TestLocallySchurPositive:
    @pytest.mark.parametrize("name", ["fig8", "fig12", "fig1"])
    def test_positive_fixtures(self, name):
        assert is_locally_schur_positive(fixture(name)).holds

    def test_fig19_not(self):
        assert not is_locally_schur_positive(fixture("fig19")).holds


class TestClassification:
    @pytest.mark.parametrize(
        "name,degree,kind,k",
        [
            ("fig4a", 4, "s31_plus_k_s22", 1),
            ("fig4b", 4, "s211_plus_k_s22", 1),
            ("fig4c", 4, "k_s22", 2),
            ("fig5a", 5, "s32_plus_k_s311", 1),
            ("fig5b", 5, "s221_plus_k_s311", 1),
            ("fig5c", 5, "k_s311", 2),
            ("fig6", 6, "k_s321", 2),
        ],
    )
    def test_fixture_forms(self, name, degree, kind, k):
        G = fixture(name)
        comp = G.components(G.colors())[0]
        got = classify_small_component(comp, degree)
        assert got.ok and got.kind == kind and got.k == k

    def test_single_schur_component(self):
        G = build_standard_deg((3, 1))
        comp = G.components(G.colors())[0]
        got = classify_small_component(comp, 4)
        assert got.ok and got.kind == "single" and got.lam == (3, 1)

    def test_hypothesis_violation_reported(self):
        # two isolated vertices with non-positive degree-4 window
        G = SignedColoredGraph(
            4, 4, {"a": (1, 1, -1), "b": (-1, -1, 1)}, [(3, "a", "b")]
        )
        comp = G.components(G.colors())[0]
        got = classify_small_component(comp, 4)
        assert not got.ok

    def test_degree6_props_on_corpus(self):
        # connected degree-6 graphs with LSF up through 5 classify as a single
        # Schur function or a multiple of the staircase shape
        for lam in enumerate_partitions(6):
            G = build_standard_deg(lam)
            comp = G.components(G.colors())[0]
            got = classify_small_component(comp, 6)
            assert got.ok and got.kind == "single" and got.lam == lam


class TestSupplementaryAxioms:
    def test_fig19_fails_4a(self):
        assert not check_axiom4a(fixture("fig19")).holds

    def test_fig8_passes_4a(self):
        assert check_axiom4a(fixture("fig8")).holds

    def test_fig21_passes_4a_fails_4b(self):
        G = fixture("fig21")
        assert check_axiom4a(G).holds
        assert not check_axiom4b(G).holds

    def test_vacuous_on_standard(self):
        for lam in [(3, 2), (3, 2, 1), (4, 2)]:
            G = build_standard_deg(lam)
            assert check_axiom4a(G).holds
            assert check_axiom4b(G).holds


class TestEquivalences:
    def test_axiom4_iff_lsf45(self):
        for name, G in corpus(7):
            ax = check_axiom(G, 4).holds
            lsf = check_lsf(G, 4).holds and check_lsf(G, 5).holds
            assert ax == lsf, name

    def test_axiom6_iff_lsf6_given_axiom4(self):
        for name, G in corpus(7):
            if not check_axiom(G, 4).holds:
                continue
            assert check_axiom(G, 6).holds == check_lsf(G, 6).holds, name

    def test_axiom46_iff_lsf456(self):
        for name, G in corpus(7):
            left = check_axiom(G, 4).holds and check_axiom(G, 6).holds
            right = all(check_lsf(G, m).holds for m in (4, 5, 6))
            assert left == right, name

    def test_defects_empty_iff_axiom4(self):
        for name, G in corpus(7):
            empty = all(defect_sets(G, i).all_empty() for i in range(3, G.n))
            assert empty == check_axiom(G, 4).holds, name

    def test_axiom4_implies_axiom3(self):
        for name, G in corpus(7):
            if check_axiom(G, 4).holds:
                assert check_axiom(G, 3).holds, name

    def test_prop_axiom3_from_lsp4(self):
        # type (n, n) with axiom 1 and degree-4 positivity implies axiom 3
        for name, G in corpus(7):
            if G.n != G.N:
                continue
            if check_axiom(G, 1).holds and check_lsp(G, 4).holds:
                assert check_axiom(G, 3).holds, name
