#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧪 Testes de Reticulados - intlat

HNF, pertinência, cobertura, imagem e inclusão de cosets, incluindo
verificações por força bruta em janelas pequenas.
"""

import itertools
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from porous.algebra.intlat import (
    LatticeCoset,
    coset_covering,
    coset_image,
    coset_intersects,
    coset_member,
    coset_subset,
    hnf,
    identity,
    lattice_member,
    mat_vec,
    xgcd,
)
from porous.core.exceptions import DimensionMismatchError


def brute_force_member(vectors, v, bound=6):
    """Procura coeficientes inteiros em [-bound, bound] que gerem v."""
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(vectors)):
        combo = tuple(sum(c * g[i] for c, g in zip(coeffs, vectors)) for i in range(len(v)))
        if combo == tuple(v):
            return True
    return False


class TestHermiteNormalForm(unittest.TestCase):
    """
    🔷 Testes da forma normal de Hermite
    """

    def test_exemplo_classico(self):
        """{(2,2),(0,6),(2,6)} gera o mesmo reticulado que {(2,0),(0,2)}"""
        lattice = hnf([(2, 2), (0, 6), (2, 6)])
        self.assertEqual(lattice.basis, ((2, 0), (0, 2)))
        self.assertEqual(lattice.volume, 4)
        self.assertTrue(lattice.is_full)

    def test_identidade_ja_em_hnf(self):
        self.assertEqual(hnf([(1, 0), (0, 1)]).basis, ((1, 0), (0, 1)))

    def test_unidimensional_mdc(self):
        """4 e 6 geram 2Z"""
        self.assertEqual(hnf([(4,), (6,)]).basis, ((2,),))

    def test_vazio_e_zeros(self):
        self.assertEqual(hnf([], dim=2).rank, 0)
        self.assertEqual(hnf([(0, 0), (0, 0)]).rank, 0)
        with self.assertRaises(DimensionMismatchError):
            hnf([])

    def test_dimensoes_diferentes(self):
        with self.assertRaises(DimensionMismatchError):
            hnf([(1, 2), (1, 2, 3)])

    def test_idempotente(self):
        rng = random.Random(7)
        for _ in range(50):
            vectors = [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(rng.randint(1, 4))]
            first = hnf(vectors, 3)
            self.assertEqual(hnf(first.basis, 3), first)

    def test_unicidade_por_geradores_equivalentes(self):
        """Geradores diferentes do mesmo reticulado produzem a mesma base"""
        self.assertEqual(hnf([(2, 0), (0, 2)]), hnf([(2, 2), (0, 6), (2, 6)]))
        self.assertEqual(hnf([(2, 1), (1, 1)]), hnf([(1, 0), (0, 1)]))

    def test_invariantes_de_forma(self):
        rng = random.Random(11)
        for _ in range(50):
            vectors = [tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(rng.randint(1, 4))]
            lattice = hnf(vectors, 3)
            rows = list(lattice.pivots)
            self.assertEqual(rows, sorted(set(rows)))
            for k, (vector, row) in enumerate(zip(lattice.basis, lattice.pivots)):
                self.assertGreater(vector[row], 0)
                self.assertTrue(all(x == 0 for x in vector[:row]))
                for earlier in lattice.basis[:k]:
                    self.assertTrue(0 <= earlier[row] < vector[row])

    def test_pertinencia_concorda_com_forca_bruta(self):
        """Combinações encontradas por força bruta pertencem à HNF"""
        rng = random.Random(3)
        for _ in range(25):
            vectors = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(2)]
            lattice = hnf(vectors, 2)
            for v in itertools.product(range(-4, 5), repeat=2):
                if brute_force_member(vectors, v, bound=3):
                    self.assertTrue(lattice_member(lattice, v), f"{v} em {vectors}")

    def test_pertinencia_exata_com_base_independente(self):
        """Com dois geradores independentes, pertence sse a solução racional é inteira"""
        rng = random.Random(4)
        checked = 0
        while checked < 25:
            (a, b), (c, d) = [tuple(rng.randint(-4, 4) for _ in range(2)) for _ in range(2)]
            det = a * d - b * c
            if det == 0:
                continue
            checked += 1
            lattice = hnf([(a, b), (c, d)])
            self.assertEqual(lattice.volume, abs(det))
            for x, y in itertools.product(range(-5, 6), repeat=2):
                # (x, y) = s·(a, b) + t·(c, d)
                s_num = x * d - y * c
                t_num = a * y - b * x
                expected = s_num % det == 0 and t_num % det == 0
                self.assertEqual(lattice_member(lattice, (x, y)), expected)


class TestPertinencia(unittest.TestCase):
    """
    🔍 Testes de pertinência em reticulados
    """

    def test_exemplos(self):
        lattice = hnf([(2, 0), (0, 2)])
        self.assertTrue(lattice_member(lattice, (2, 4)))
        self.assertFalse(lattice_member(lattice, (1, 2)))
        self.assertTrue(lattice_member(hnf([(2, 2), (0, 6), (2, 6)]), (2, 2)))
        self.assertIn((0, 0), lattice)

    def test_dimensao_errada(self):
        with self.assertRaises(DimensionMismatchError):
            lattice_member(hnf([(1, 0)]), (1, 2, 3))

    def test_xgcd(self):
        for a, b in [(4, 6), (35, 15), (-8, 12), (7, 0)]:
            x, y, g = xgcd(a, b)
            self.assertEqual(x * a + y * b, g)


class TestCosets(unittest.TestCase):
    """
    🔶 Testes de cobertura, imagem e inclusão de cosets
    """

    def test_cobertura_unidimensional(self):
        covering = coset_covering(LatticeCoset.make([1], [[2]]), LatticeCoset.make([3], [[6]]))
        self.assertEqual(covering, LatticeCoset.make([1], [[2]]))
        for y in range(-20, 21):
            self.assertEqual(coset_member(covering, [y]), y % 2 == 1)

    def test_cobertura_de_si_mesmo(self):
        coset = LatticeCoset.make([1, 2], [[2, 0], [1, 3]])
        self.assertEqual(coset_covering(coset, coset), coset)

    def test_cobertura_gera_z2(self):
        covering = coset_covering(LatticeCoset.make([0, 0], [[1, 0]]), LatticeCoset.make([0, 1], [[1, 0]]))
        self.assertEqual(covering, LatticeCoset.make([0, 0], [[1, 0], [0, 1]]))

    def test_cobertura_contem_ambos_e_e_minima(self):
        """Cobertura contém os dois cosets e está contida em todo coset que os contenha"""
        rng = random.Random(5)
        candidates = [
            LatticeCoset.make(base, periods)
            for base in [(0, 0), (1, 0), (0, 1), (1, 1)]
            for periods in [[(1, 0), (0, 1)], [(2, 0), (0, 1)], [(1, 0), (0, 2)], [(2, 0), (0, 2)], [(1, 1), (0, 2)]]
        ]
        for _ in range(40):
            first = LatticeCoset.make(
                [rng.randint(-4, 4) for _ in range(2)],
                [[rng.randint(-4, 4) for _ in range(2)]],
            )
            second = LatticeCoset.make(
                [rng.randint(-4, 4) for _ in range(2)],
                [[rng.randint(-4, 4) for _ in range(2)]],
            )
            covering = coset_covering(first, second)
            self.assertTrue(coset_subset(first, covering))
            self.assertTrue(coset_subset(second, covering))
            for candidate in candidates:
                if coset_subset(first, candidate) and coset_subset(second, candidate):
                    self.assertTrue(coset_subset(covering, candidate))

    def test_imagem(self):
        self.assertEqual(coset_image(((2,),), LatticeCoset.make([1], [[3]])), LatticeCoset.make([2], [[6]]))
        coset = LatticeCoset.make([1, 2], [[1, 0]])
        self.assertEqual(coset_image(identity(2), coset), coset)
        swapped = coset_image(((0, 1), (1, 0)), coset)
        self.assertEqual(swapped, LatticeCoset.make([2, 1], [[0, 1]]))

    def test_imagem_comuta_com_pertinencia(self):
        rng = random.Random(9)
        for _ in range(30):
            m = tuple(tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(2))
            coset = LatticeCoset.make([rng.randint(-3, 3) for _ in range(2)], [[rng.randint(-3, 3) for _ in range(2)]])
            image = coset_image(m, coset)
            for k in range(-3, 4):
                period = coset.periods[0] if coset.periods else (0, 0)
                v = tuple(b + k * p for b, p in zip(coset.base, period))
                self.assertTrue(coset_member(image, mat_vec(m, v)))

    def test_inclusao(self):
        self.assertTrue(coset_subset(LatticeCoset.make([2], [[6]]), LatticeCoset.make([2], [[3]])))
        self.assertFalse(coset_subset(LatticeCoset.make([1], [[3]]), LatticeCoset.make([1], [[6]])))
        self.assertTrue(coset_subset(
            LatticeCoset.make([1, 1], [[2, 0]]),
            LatticeCoset.make([1, 1], [[1, 0], [0, 1]]),
        ))

    def test_intersecao(self):
        self.assertTrue(coset_intersects(LatticeCoset.make([1], [[2]]), LatticeCoset.make([3], [[6]])))
        self.assertFalse(coset_intersects(LatticeCoset.make([0], [[2]]), LatticeCoset.make([1], [[4]])))
        self.assertTrue(coset_intersects(LatticeCoset.make([0], [[2]]), LatticeCoset.make([1], [[3]])))

    def test_base_canonica(self):
        """Cosets iguais como conjuntos são iguais como valores"""
        self.assertEqual(LatticeCoset.make([7], [[3]]), LatticeCoset.make([1], [[-3]]))
        self.assertEqual(LatticeCoset.make([1, 1], [[1, 0]]), LatticeCoset.make([0, 1], [[1, 0]]))

    def test_renderizacao(self):
        self.assertEqual(LatticeCoset.make([1], [[3]]).render(), "{1 +3Z}")
        self.assertEqual(LatticeCoset.make([0], [[1]]).render(), "{0 +Z}")
        self.assertEqual(LatticeCoset.make([1, 1], [[1, 0]]).render(), "{(0, 1) +(1, 0)Z}")
        self.assertEqual(LatticeCoset.make([4, 5]).render(), "{(4, 5)}")

    def test_dimensoes_incompativeis(self):
        with self.assertRaises(DimensionMismatchError):
            coset_covering(LatticeCoset.make([1]), LatticeCoset.make([1, 2]))
        with self.assertRaises(DimensionMismatchError):
            coset_subset(LatticeCoset.make([1]), LatticeCoset.make([1, 2]))


if __name__ == "__main__":
    unittest.main()
