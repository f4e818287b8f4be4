#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧪 Testes de Síntese Afim 1-D - affine1d

Casos por família de funções, normalização, limites de crescimento,
decisão de alvos e o portão de correção sobre instâncias geradas.
"""

import os
import random
import sys
import time
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from porous.algebra.semilinear import LinearSet1D, SemiLinearSet
from porous.bench.generator import all_combos, gen_random
from porous.core.exceptions import PreconditionError
from porous.core.models import AffineFn, AffineSystem, FnClass, PointTarget, ZClassTarget
from porous.proof.cert import Certificate, check_inductive, find_witness, orbit_sample, witness_is_valid
from porous.synthesis.affine1d import classify, decide, growth_bound, invariant_for, normalize, synthesize


def system(start, fns, target=None):
    return AffineSystem.make(start, fns, target)


class TestClassificacao(unittest.TestCase):
    """
    🏷️ Testes de classify e growth_bound
    """

    def test_classes(self):
        self.assertIs(classify(AffineFn(1, 0)), FnClass.REDUNDANT)
        self.assertIs(classify(AffineFn(0, 5)), FnClass.REDUNDANT)
        self.assertIs(classify(AffineFn(1, 3)), FnClass.COUNTER_POS)
        self.assertIs(classify(AffineFn(1, -3)), FnClass.COUNTER_NEG)
        self.assertIs(classify(AffineFn(-1, 4)), FnClass.PURE_INVERTER)
        self.assertIs(classify(AffineFn(2, -1)), FnClass.GROWING)
        self.assertIs(classify(AffineFn(-3, 1)), FnClass.GROWING_INVERTING)

    def test_limite_de_crescimento(self):
        self.assertEqual(growth_bound(AffineFn(2, 6)).value, 6)
        self.assertEqual(growth_bound(AffineFn(3, -5), 2).value, 4)
        self.assertEqual(growth_bound(AffineFn(-4, 1), 0).value, 1)
        with self.assertRaises(PreconditionError):
            growth_bound(AffineFn(1, 1))
        with self.assertRaises(PreconditionError):
            growth_bound(AffineFn(2, 1), -1)

    def test_limite_garante_afastamento(self):
        for a in (-4, -2, 2, 3):
            for b in (-7, 0, 5):
                f = AffineFn(a, b)
                for margin in (0, 3):
                    bound = growth_bound(f, margin).value
                    for x in list(range(bound, bound + 30)) + list(range(-bound - 30, -bound + 1)):
                        self.assertGreaterEqual(abs(f(x)), abs(x) + margin)


class TestNormalizacao(unittest.TestCase):
    """
    🧹 Testes de normalize
    """

    def test_remove_identidade_e_constantes(self):
        cores, record = normalize(system(2, [(1, 0), (0, 7), (2, 1)]))
        self.assertEqual(len(cores), 2)
        self.assertEqual(cores[0].start, 2)
        self.assertEqual(cores[1].start, 7)
        self.assertEqual(cores[0].fns, (AffineFn(2, 1),))
        self.assertEqual(record.constants, (7,))
        self.assertEqual(len(record.dropped), 2)

    def test_espelha_inicio_negativo(self):
        cores, record = normalize(system(-3, [(1, 2)], 5))
        self.assertEqual(record.mirrored, (True,))
        self.assertEqual(cores[0].start, 3)
        self.assertEqual(cores[0].fns, (AffineFn(1, -2),))
        self.assertEqual(cores[0].target, PointTarget(-5))

    def test_contadores_derivados(self):
        _, record = normalize(system(0, [(-1, 3), (-1, 5)]))
        self.assertEqual(set(record.derived), {AffineFn(1, -2), AffineFn(1, 2)})

    def test_sintese_rejeita_redundantes(self):
        with self.assertRaises(PreconditionError):
            synthesize(system(1, [(1, 0)]))
        with self.assertRaises(PreconditionError):
            synthesize(system(1, [(0, 3)]))


class TestCasosDeSintese(unittest.TestCase):
    """
    📈 Testes dos casos da síntese 1-D
    """

    def test_quebra_cabeca_mu(self):
        invariant = invariant_for(system(1, [(1, -3), (2, 0)], 0))
        self.assertEqual(invariant.render(), "{1 +3Z} U {2 +3Z}")

    def test_cadeia_de_contadores(self):
        invariant = invariant_for(system(5, [(1, 4), (2, 6)]))
        self.assertEqual(invariant.render(), "{5 +4N} U {16 +4N} U {38 +4N}")

    def test_classe_promovida(self):
        invariant = invariant_for(system(5, [(1, 4), (2, -6)]))
        self.assertEqual(invariant.render(), "{2 +4Z} U {4 +4N} U {5 +4N}")

    def test_contadores_opostos(self):
        invariant = invariant_for(system(1, [(1, 4), (1, -6)]))
        self.assertEqual(invariant, SemiLinearSet.of([LinearSet1D.residue_class(1, 2)]))

    def test_crescente_com_caudas(self):
        invariant = invariant_for(system(1, [(3, 0)], 10))
        self.assertEqual(invariant.render(), "{11 +N} U {-11 -N} U {1} U {3} U {9}")

    def test_inversor_puro(self):
        invariant = invariant_for(system(3, [(-1, 4)]))
        self.assertEqual(invariant.render(), "{1} U {3}")

    def test_dois_inversores_viram_contadores(self):
        invariant = invariant_for(system(0, [(-1, 3), (-1, 5)]))
        self.assertEqual(invariant.render(), "{0 +Z}")

    def test_apenas_constante(self):
        invariant = invariant_for(system(4, [(0, 9)]))
        self.assertEqual(invariant.render(), "{4} U {9}")

    def test_inicio_negativo(self):
        invariant = invariant_for(system(-5, [(1, -4)]))
        self.assertEqual(invariant.render(), "{-5 -4N}")

    def test_crescente_com_inversor(self):
        sys_ = system(2, [(2, 1), (-1, 3)], 4)
        invariant = invariant_for(sys_)
        self.assertIsInstance(check_inductive(invariant, sys_), Certificate)
        for x in orbit_sample(sys_, 500):
            self.assertIn(x, invariant)


class TestDecisao(unittest.TestCase):
    """
    ⚖️ Testes de decide
    """

    def test_mu_inalcancavel(self):
        decision = decide(system(1, [(1, -3), (2, 0)], 0))
        self.assertFalse(decision.reachable)
        self.assertEqual(decision.invariant.render(), "{1 +3Z} U {2 +3Z}")

    def test_contador_alcanca(self):
        sys_ = system(1, [(1, 1)], 5)
        decision = decide(sys_)
        self.assertTrue(decision.reachable)
        witness = find_witness(sys_)
        self.assertEqual(witness.render(), "1 -> 2 -> 3 -> 4 -> 5")

    def test_alvo_classe_inalcancavel(self):
        decision = decide(system(1, [(2, 0)], ZClassTarget(0, 3)))
        self.assertFalse(decision.reachable)
        self.assertEqual(decision.invariant.render(), "{1 +3Z} U {2 +3Z}")

    def test_alvo_classe_alcancavel(self):
        sys_ = system(1, [(2, 0), (1, 1)], ZClassTarget(0, 3))
        decision = decide(sys_)
        self.assertTrue(decision.reachable)
        self.assertTrue(witness_is_valid(sys_, decision.witness))
        self.assertEqual(decision.invariant.render(), "{0 +Z}")

    def test_alvo_classe_alcancavel_traz_fecho(self):
        sys_ = system(1, [(2, 0)], ZClassTarget(2, 3))
        decision = decide(sys_)
        self.assertTrue(decision.reachable)
        self.assertEqual(decision.witness.trace, (1, 2))
        self.assertEqual(decision.invariant.render(), "{1 +3Z} U {2 +3Z}")
        self.assertIsInstance(check_inductive(decision.invariant, sys_, check_target=False), Certificate)

    def test_familia_completa_de_inversores(self):
        sys_ = system(460, [(-1, -155), (-1, -978), (-1, 0)], 3714)
        started = time.perf_counter()
        decision = decide(sys_)
        elapsed = time.perf_counter() - started
        self.assertTrue(decision.reachable)
        self.assertEqual(decision.invariant.render(), "{0 +Z}")
        self.assertLess(elapsed, 1.0)
        certificate = check_inductive(decision.invariant, sys_, check_target=False)
        self.assertEqual(len(certificate.rows), 3)

    def test_sem_alvo(self):
        with self.assertRaises(PreconditionError):
            decide(system(1, [(1, 1)]))


class TestPortaoDeCorrecao(unittest.TestCase):
    """
    🛡️ Portão de correção sobre instâncias geradas

    Para cada combinação de tipos (tamanho 8): o invariante passa no
    verificador, contém o início e a órbita amostrada e, quando
    inalcançável, exclui o alvo. A versão completa (1000 instâncias,
    orçamento de 10^6 nós para testemunhas) roda com POROUS_RUN_SLOW=1.
    """

    def _check(self, sys_, orbit_budget, witness_budget, require_witness):
        decision = decide(sys_)
        invariant = decision.invariant
        certificate = check_inductive(invariant, sys_, check_target=not decision.reachable)
        self.assertIsInstance(certificate, Certificate, sys_.describe())
        self.assertIn(sys_.start, invariant)
        for x in orbit_sample(sys_, orbit_budget):
            self.assertIn(x, invariant, sys_.describe())
        if decision.reachable:
            self.assertIn(sys_.target.value, invariant)
            witness = find_witness(sys_, witness_budget)
            if require_witness:
                self.assertIsNotNone(witness, sys_.describe())
            if witness is not None:
                self.assertTrue(witness_is_valid(sys_, witness))

    def test_todas_as_combinacoes(self):
        for combo in all_combos():
            self._check(gen_random(1, 8, combo), 1000, 20_000, require_witness=False)

    def test_portao_completo(self):
        if os.getenv("POROUS_RUN_SLOW") != "1":
            self.skipTest("Defina POROUS_RUN_SLOW=1 para o portão completo")
        combos = all_combos()
        for i in range(1000):
            self._check(gen_random(i, 8, combos[i % len(combos)]), 10_000, 1_000_000, require_witness=True)

def window_reach(sys_, radius):
    """Órbita exata restrita a |x| <= radius."""
    seen = {sys_.start}
    frontier = [sys_.start]
    while frontier:
        x = frontier.pop()
        for f in sys_.fns:
            y = f(x)
            if abs(y) <= radius and y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


class TestOraculoForcaBruta(unittest.TestCase):
    """
    🔎 decide contra busca em largura

    1000 instâncias com |a|, |b| <= 5 (constantes e identidades incluídas)
    e |start|, |target| <= 10. Alcançável exige testemunha; inalcançável
    exige certificado e nenhuma testemunha na busca limitada.
    """

    def test_concorda_com_busca(self):
        rng = random.Random(2024)
        negative_starts = 0
        constants = 0
        for _ in range(1000):
            fns = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 3))]
            sys_ = system(rng.randint(-10, 10), fns, rng.randint(-10, 10))
            negative_starts += sys_.start < 0
            constants += any(f.is_constant for f in sys_.fns)

            decision = decide(sys_)
            if decision.reachable:
                witness = find_witness(sys_, 1_000_000)
                self.assertIsNotNone(witness, sys_.describe())
                self.assertTrue(witness_is_valid(sys_, witness))
            else:
                self.assertIsNone(find_witness(sys_, 5_000), sys_.describe())
                self.assertIsInstance(check_inductive(decision.invariant, sys_), Certificate, sys_.describe())

        self.assertGreater(negative_starts, 100)
        self.assertGreater(constants, 50)


class TestExatidao(unittest.TestCase):
    """
    🎯 Contadores opostos, inversor puro e contadores de um sinal

    Nesses casos o invariante é o conjunto alcançável: todo elemento w com
    |w| <= 50 aparece na órbita explorada em |x| <= RADIUS. Com
    POROUS_RUN_SLOW=1 roda 200 instâncias por caso.
    """

    RADIUS = 5_000
    EXTRA_SLOPES = (-3, -2, -1, 0, 2, 3)

    def _count(self):
        return 200 if os.getenv("POROUS_RUN_SLOW") == "1" else 20

    def _extras(self, rng):
        return [(rng.choice(self.EXTRA_SLOPES), rng.randint(-5, 5)) for _ in range(rng.randint(0, 2))]

    def _assert_exact(self, sys_):
        invariant = invariant_for(sys_)
        reached = window_reach(sys_, self.RADIUS)
        missing = [w for w in range(-50, 51) if w in invariant and w not in reached]
        self.assertEqual(missing, [], sys_.describe())

    def test_contadores_opostos(self):
        rng = random.Random(31)
        for _ in range(self._count()):
            fns = [(1, rng.randint(1, 6)), (1, -rng.randint(1, 6))] + self._extras(rng)
            self._assert_exact(system(rng.randint(-10, 10), fns))

    def test_inversor_puro(self):
        rng = random.Random(32)
        for _ in range(self._count()):
            fns = [(-1, rng.randint(-5, 5))] + [(1, 0)] * rng.randint(0, 1)
            self._assert_exact(system(rng.randint(-10, 10), fns))

    def test_contadores_de_um_sinal(self):
        rng = random.Random(33)
        for _ in range(self._count()):
            sign = rng.choice((1, -1))
            counters = [(1, sign * rng.randint(1, 6)) for _ in range(rng.randint(1, 2))]
            self._assert_exact(system(rng.randint(-10, 10), counters + self._extras(rng)))


class TestJanelaDeCrescimento(unittest.TestCase):
    """
    🪟 Funções crescentes sem contadores: fora da janela não se volta

    As caudas do invariante delimitam a janela aberta (low, high); todo
    ponto com x <= low ou x >= high tem os sucessores também fora dela.
    """

    def _window(self, invariant, label):
        ascending = [c for c in invariant if not c.is_singleton and c.period > 0]
        descending = [c for c in invariant if not c.is_singleton and c.period < 0]
        self.assertEqual((len(ascending), len(descending)), (1, 1), label)
        return descending[0].base, ascending[0].base

    def test_sem_reentrada(self):
        rng = random.Random(11)
        for i in range(200):
            fns = [(rng.choice((-3, -2, 2, 3)), rng.randint(-5, 5)) for _ in range(rng.randint(1, 3))]
            if i % 2:
                fns.append((-1, rng.randint(-5, 5)))
            sys_ = system(rng.randint(-10, 10), fns, rng.randint(-10, 10))
            invariant = invariant_for(sys_)
            low, high = self._window(invariant, sys_.describe())

            for x in list(range(low - 100, low + 1)) + list(range(high, high + 101)):
                for f in sys_.fns:
                    y = f(x)
                    self.assertTrue(y <= low or y >= high, f"{x} -> {y} em ({low}, {high}): {sys_.describe()}")

            self.assertIsInstance(check_inductive(invariant, sys_), Certificate, sys_.describe())
            for x in orbit_sample(sys_, 300):
                self.assertIn(x, invariant)



if __name__ == "__main__":
    unittest.main()
