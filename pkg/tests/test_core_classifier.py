import unittest
from unittest import mock

from hypothesis import given, settings
from hypothesis import strategies as st

from suite_utils.decorators import exhaustive, number
from suite_utils.timeout import timeout
from constants import CoreReason, CoreStatus, NotCoreCase
from core_classifier import (build_retraction, classify_core, compute_a, core_params,
                             core_witness_cycle, has_spoked_min_odd_cycle, is_endomorphism_transitive,
                             prism_endomorphism, retraction_target)
from gp_core import DomainError, GPParams, build_gp, generalized_prism, is_bipartite_gp, min_odd_cycle_witnesses
from hom_engine import is_core_oracle, is_endo_transitive_oracle, verify_homomorphism, verify_retraction
from utils import coprime, valid_pairs

pairs = st.integers(min_value=3, max_value=200).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=(n - 1) // 2)))


def non_bipartite(n_max):
    return [(n, k) for n, k in valid_pairs(n_max) if not is_bipartite_gp(GPParams(n, k))]


class TestCoreClassifier(unittest.TestCase):

    @number("3.1")
    def test_compute_a(self):
        self.assertEqual(compute_a(15, 3), 1)
        self.assertEqual(compute_a(15, 6), 3)
        self.assertEqual(compute_a(10, 4), 3)
        self.assertEqual(compute_a(7, 3), 5)
        self.assertEqual(compute_a(5, 2), 3)
        self.assertEqual(core_params(12, 4).g_inner, 3)

    @number("3.2")
    def test_classify(self):
        cases = {
            (5, 2): (CoreStatus.CORE, CoreReason.C2, None),
            (7, 3): (CoreStatus.CORE, CoreReason.C2, None),
            (10, 2): (CoreStatus.CORE, CoreReason.C3, None),
            (7, 2): (CoreStatus.CORE, CoreReason.C3, None),
            (12, 2): (CoreStatus.CORE, CoreReason.C1, None),
            (8, 3): (CoreStatus.BIPARTITE, None, None),
            (15, 3): (CoreStatus.NOT_CORE, None, NotCoreCase.A_EVEN_SMALL),
            (15, 6): (CoreStatus.NOT_CORE, None, NotCoreCase.A_EVEN_SMALL),
            (10, 4): (CoreStatus.NOT_CORE, None, NotCoreCase.A_ODD_LARGE),
            (9, 1): (CoreStatus.NOT_CORE, None, NotCoreCase.A_EVEN_SMALL),
        }
        for (n, k), (status, reason, case) in cases.items():
            verdict = classify_core(n, k)
            self.assertEqual((verdict.status, verdict.reason, verdict.case), (status, reason, case), (n, k))
        self.assertTrue(classify_core(5, 2).is_core)
        self.assertFalse(classify_core(8, 3).is_core)

    @number("3.3")
    def test_witness_cycles(self):
        w = core_witness_cycle(7, 3)
        self.assertEqual(w.vertices, (8, 11, 7, 0, 1))
        self.assertEqual(w.spoke_count, 2)
        w = core_witness_cycle(10, 2)
        self.assertEqual(w.vertices, (10, 12, 2, 1, 0))
        self.assertIsNone(core_witness_cycle(15, 3))
        self.assertIsNone(core_witness_cycle(8, 3))
        self.assertIsNone(core_witness_cycle(12, 2))

    @number("3.4")
    def test_retraction_spot_values(self):
        for n, k in [(15, 3), (15, 6), (10, 4)]:
            f = build_retraction(n, k)
            target = retraction_target(n, k)
            self.assertTrue(f.verified)
            self.assertTrue(verify_retraction(build_gp(GPParams(n, k)), f, target))
            self.assertEqual(f.image_set(), frozenset(target))
            self.assertEqual(len(target), GPParams(n, k).inner_len)
        self.assertEqual(retraction_target(15, 3), [15, 18, 21, 24, 27])

    @number("3.5")
    def test_retraction_sweep(self):
        for n, k in valid_pairs(30):
            if classify_core(n, k).status is not CoreStatus.NOT_CORE:
                continue
            target = retraction_target(n, k)
            f = build_retraction(n, k)
            self.assertTrue(verify_retraction(build_gp(GPParams(n, k)), f, target), (n, k))
            self.assertEqual(len(f.image_set()), n // GPParams(n, k).d, (n, k))

    @number("3.6")
    def test_retraction_refused(self):
        with self.assertRaises(DomainError):
            build_retraction(5, 2)
        with self.assertRaises(DomainError):
            build_retraction(8, 3)

    @number("3.7")
    @timeout(300)
    def test_core_closed_form_small(self):
        for n, k in non_bipartite(10):
            closed = classify_core(n, k).is_core
            self.assertEqual(closed, is_core_oracle(build_gp(GPParams(n, k)), vertices=(0, n)), (n, k))
            self.assertEqual(closed, has_spoked_min_odd_cycle(n, k), (n, k))

    @number("3.8")
    @exhaustive()
    def test_core_closed_form(self):
        for n, k in non_bipartite(16):
            closed = classify_core(n, k).is_core
            self.assertEqual(closed, is_core_oracle(build_gp(GPParams(n, k)), vertices=(0, n)), (n, k))
            self.assertEqual(closed, has_spoked_min_odd_cycle(n, k), (n, k))

    @number("3.9")
    def test_coprime_cores(self):
        for n, k in valid_pairs(40):
            if coprime(n, k):
                expected = not is_bipartite_gp(GPParams(n, k)) and k != 1
                self.assertEqual(classify_core(n, k).is_core, expected, (n, k))

    @number("3.10")
    def test_spoke_bound_small(self):
        self._spoke_bound(12)

    @number("3.11")
    @exhaustive()
    def test_spoke_bound(self):
        self._spoke_bound(20)

    def _spoke_bound(self, n_max):
        for n, k in non_bipartite(n_max):
            params = GPParams(n, k)
            self.assertLessEqual(max(w.spoke_count for w in min_odd_cycle_witnesses(params)), 2, (n, k))
            verdict = classify_core(n, k)
            witness = core_witness_cycle(n, k)
            d, a, g = verdict.d, verdict.a, params.inner_len
            if verdict.reason is CoreReason.C2:
                self.assertEqual(witness.length, g - a + d + 2, (n, k))
            elif verdict.reason is CoreReason.C3:
                self.assertEqual(witness.length, a + d + 2, (n, k))
            else:
                self.assertIsNone(witness)

    @number("3.12")
    def test_prism_endomorphism(self):
        f = prism_endomorphism(5)
        self.assertTrue(verify_homomorphism(generalized_prism(5, 1), generalized_prism(5, 1), f))
        self.assertEqual(f.image_set(), frozenset(range(5)))
        g = prism_endomorphism(4, 3)
        self.assertEqual(len(g), 16)
        self.assertEqual(g.image_set(), frozenset(range(4)))

    @number("3.13")
    @timeout(300)
    def test_endo_transitivity_small(self):
        for n, k in valid_pairs(8):
            oracle = is_endo_transitive_oracle(build_gp(GPParams(n, k)), sources=(0, n))
            self.assertEqual(is_endomorphism_transitive(n, k), oracle, (n, k))

    @number("3.14")
    @exhaustive()
    def test_endo_transitivity(self):
        for n, k in valid_pairs(12):
            oracle = is_endo_transitive_oracle(build_gp(GPParams(n, k)), sources=(0, n))
            self.assertEqual(is_endomorphism_transitive(n, k), oracle, (n, k))

    @number("3.15")
    @settings(max_examples=200, deadline=None)
    @given(pairs)
    def test_a_is_the_inverse(self, pair):
        n, k = pair
        cp = core_params(n, k)
        self.assertTrue(0 < cp.a < cp.g_inner)
        self.assertEqual((cp.a * k - cp.d) % n, 0)
        verdict = classify_core(n, k)
        self.assertEqual(verdict.status is CoreStatus.BIPARTITE, n % 2 == 0 and k % 2 == 1)

    @number("3.16")
    def test_retraction_values_15_3(self):
        # u_{3q+r} goes to v_{3q + (3, 6, 3)[r]}, v_i goes three steps behind u_i
        f = build_retraction(15, 3)
        for i in range(15):
            q, r = divmod(i, 3)
            self.assertEqual(f[i], 15 + (3 * q + (3, 6, 3)[r]) % 15, i)
            self.assertEqual(f[15 + i], 15 + (f[i] - 15 - 3) % 15, i)
        self.assertEqual(f[15], 15)
        self.assertEqual(f.image_set(), frozenset(retraction_target(15, 3)))

    @number("3.17")
    def test_compute_a_checks_its_result(self):
        with mock.patch("core_classifier.mod_inverse", return_value=0):
            with self.assertRaises(DomainError):
                compute_a(15, 3)
        with mock.patch("core_classifier.mod_inverse", return_value=2):
            with self.assertRaises(DomainError):
                compute_a(15, 3)


if __name__ == '__main__':
    unittest.main()
