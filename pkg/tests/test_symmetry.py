import unittest

from suite_utils.decorators import exhaustive, number
from suite_utils.timeout import timeout
from algebra import cyclic_group, petersen_M, petersen_S
from cayley_builder import build_cayley
from constants import EXCEPTIONAL_AUT_ORDERS
from gp_core import DomainError, GPParams, build_gp
from symmetry import (Permutation, aut_group_bruteforce, color_endomorphisms, expected_aut_order,
                      inside_out, is_automorphism, is_closed_group, is_color_endomorphism,
                      is_vertex_transitive, left_multiplication, orbits, reflection, rotation)
from utils import square_is_pm_one, valid_pairs


class TestSymmetry(unittest.TestCase):

    @number("4.1")
    def test_permutation(self):
        with self.assertRaises(ValueError):
            Permutation((0, 0, 1))
        p = Permutation((1, 2, 0, 3))
        self.assertEqual(p.inverse().image, (2, 0, 1, 3))
        self.assertTrue(p.compose(p.inverse()).is_identity())
        self.assertEqual(p.order(), 3)
        self.assertEqual(p.power(2).image, (2, 0, 1, 3))
        self.assertEqual(Permutation.identity(3).image, (0, 1, 2))

    @number("4.2")
    def test_generators(self):
        params = GPParams(5, 2)
        alpha, beta = rotation(params), reflection(params)
        self.assertTrue(alpha.automorphism_verified)
        self.assertEqual(alpha.order(), 5)
        self.assertEqual(beta.order(), 2)
        self.assertTrue(is_automorphism(build_gp(params), inside_out(params)))
        self.assertFalse(is_automorphism(build_gp(GPParams(7, 2)), inside_out(GPParams(7, 2))))
        self.assertFalse(inside_out(GPParams(12, 4)).is_injective())
        self.assertFalse(is_automorphism(build_gp(GPParams(12, 4)), inside_out(GPParams(12, 4))))

    @number("4.3")
    def test_closed_forms(self):
        self.assertTrue(is_vertex_transitive(5, 2))
        self.assertTrue(is_vertex_transitive(10, 2))
        self.assertTrue(is_vertex_transitive(13, 5))
        self.assertFalse(is_vertex_transitive(7, 2))
        self.assertIsNone(expected_aut_order(5, 2))
        self.assertIsNone(expected_aut_order(24, 5))
        self.assertEqual(expected_aut_order(7, 2), 14)
        self.assertEqual(expected_aut_order(13, 5), 52)
        self.assertEqual(expected_aut_order(7, 1), 28)

    @number("4.4")
    @timeout(120)
    def test_exceptional_orders(self):
        for n, k in [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5)]:
            perms = aut_group_bruteforce(build_gp(GPParams(n, k)))
            self.assertEqual(len(perms), EXCEPTIONAL_AUT_ORDERS[(n, k)], (n, k))

    @number("4.5")
    def test_group_and_orbits(self):
        g = build_gp(GPParams(7, 2))
        perms = aut_group_bruteforce(g)
        self.assertEqual(len(perms), 14)
        self.assertTrue(is_closed_group(perms))
        self.assertFalse(is_closed_group(perms[1:]))
        self.assertEqual(orbits(g.order, perms), [list(range(7)), list(range(7, 14))])
        petersen = build_gp(GPParams(5, 2))
        self.assertEqual(len(orbits(10, aut_group_bruteforce(petersen))), 1)

    @number("4.6")
    def test_bound(self):
        with self.assertRaises(DomainError):
            aut_group_bruteforce(build_gp(GPParams(31, 2)))

    @number("4.7")
    @timeout(300)
    def test_aut_orders_small(self):
        self._aut_sweep(8)

    @number("4.8")
    @exhaustive()
    def test_aut_orders(self):
        self._aut_sweep(12)

    def _aut_sweep(self, n_max):
        for n, k in valid_pairs(n_max):
            graph = build_gp(GPParams(n, k))
            perms = aut_group_bruteforce(graph)
            expected = expected_aut_order(n, k)
            if expected is None:
                expected = EXCEPTIONAL_AUT_ORDERS[(n, k)]
            self.assertEqual(len(perms), expected, (n, k))
            self.assertEqual(len(orbits(graph.order, perms)) == 1, is_vertex_transitive(n, k), (n, k))

    @number("4.9")
    def test_left_multiplication(self):
        self.assertEqual(left_multiplication(cyclic_group(4), 1).image, (1, 2, 3, 0))
        D = build_cayley(cyclic_group(4), (1,))
        self.assertTrue(is_color_endomorphism(D, left_multiplication(cyclic_group(4), 3)))
        self.assertFalse(is_color_endomorphism(D, (0, 0, 0, 1)))

    @number("4.10")
    def test_color_endomorphisms(self):
        M = petersen_M()
        D = build_cayley(M, (1, 6))
        found = {f.image for f in color_endomorphisms(D)}
        self.assertEqual(found, {left_multiplication(M, m).image for m in M.elements})
        self.assertEqual(len(found), 10)
        with self.assertRaises(DomainError):
            color_endomorphisms(build_cayley(petersen_S(), (1, 6)))
        with self.assertRaises(DomainError):
            color_endomorphisms(build_cayley(cyclic_group(6), (2,)))

    @number("4.11")
    def test_inside_out_sweep(self):
        for n, k in valid_pairs(30):
            params = GPParams(n, k)
            self.assertEqual(is_automorphism(build_gp(params), inside_out(params)), square_is_pm_one(n, k), (n, k))

    @number("4.12")
    @timeout(120)
    def test_dihedral_subgroup(self):
        for n, k in [(7, 2), (10, 3), (12, 5)]:
            params = GPParams(n, k)
            alpha, beta = rotation(params), reflection(params)
            self.assertEqual(beta.compose(alpha).compose(beta).image, alpha.inverse().image, (n, k))
            generated = {Permutation.identity(params.order).image}
            frontier = list(generated)
            while frontier:
                image = frontier.pop()
                for gen in (alpha, beta):
                    nxt = gen.compose(Permutation(image)).image
                    if nxt not in generated:
                        generated.add(nxt)
                        frontier.append(nxt)
            self.assertEqual(len(generated), 2 * n, (n, k))
            aut = {p.image for p in aut_group_bruteforce(build_gp(params))}
            self.assertLessEqual(generated, aut, (n, k))

    @number("4.13")
    @timeout(600)
    def test_aut_order_24_5(self):
        perms = aut_group_bruteforce(build_gp(GPParams(24, 5)))
        self.assertEqual(len(perms), EXCEPTIONAL_AUT_ORDERS[(24, 5)])
        self.assertEqual(len(perms), 144)
        self.assertTrue(is_closed_group(perms))


if __name__ == '__main__':
    unittest.main()
