#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧪 Testes de Certificados e Testemunhas - cert e formatter

O verificador precisa aceitar invariantes corretos e rejeitar, com o
motivo certo, conjuntos que não fecham, não contêm o início ou tocam o
alvo.
"""

import os
import sys
import time
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from porous.algebra.intlat import LatticeCoset
from porous.algebra.semilinear import LinearSet1D, SemiLinearSet
from porous.core.models import AffineSystem, LinearSystem, Witness
from porous.proof.cert import (
    Certificate,
    CertificateFailure,
    check_inductive,
    find_witness,
    orbit_sample,
    replay,
    witness_is_valid,
)
from porous.proof.formatter import ReportFormatter, render_table

MU = AffineSystem.make(1, [(1, -3), (2, 0)], 0)
MU_INVARIANT = SemiLinearSet.of([LinearSet1D.residue_class(1, 3), LinearSet1D.residue_class(2, 3)])


class TestVerificador(unittest.TestCase):
    """
    ✅ Testes de check_inductive
    """

    def test_mu_aceito(self):
        certificate = check_inductive(MU_INVARIANT, MU)
        self.assertIsInstance(certificate, Certificate)
        self.assertEqual(len(certificate.rows), 4)
        self.assertTrue(certificate.target_disjoint)
        self.assertEqual(certificate.start_member, LinearSet1D.residue_class(1, 3))

    def test_linhas_da_prova(self):
        rows = check_inductive(MU_INVARIANT, MU).rows
        images = [(r.source.render(), r.image.render(), r.within.render()) for r in rows]
        self.assertEqual(images, [
            ("{1 +3Z}", "{1 +3Z}", "{1 +3Z}"),
            ("{1 +3Z}", "{2 +6Z}", "{2 +3Z}"),
            ("{2 +3Z}", "{2 +3Z}", "{2 +3Z}"),
            ("{2 +3Z}", "{4 +6Z}", "{1 +3Z}"),
        ])

    def test_falha_de_fechamento(self):
        invariant = SemiLinearSet.of([LinearSet1D.residue_class(1, 3)])
        failure = check_inductive(invariant, MU)
        self.assertIsInstance(failure, CertificateFailure)
        self.assertEqual(failure.reason, "closure")
        self.assertIn("{2 +6Z}", failure.describe())

    def test_falha_de_inicio(self):
        invariant = SemiLinearSet.of([LinearSet1D.residue_class(2, 3)])
        self.assertEqual(check_inductive(invariant, MU).reason, "start")

    def test_falha_de_alvo(self):
        invariant = SemiLinearSet.of([LinearSet1D.residue_class(0, 1)])
        self.assertEqual(check_inductive(invariant, MU).reason, "target")
        self.assertIsInstance(check_inductive(invariant, MU, check_target=False), Certificate)

    def test_cobertura_exige_um_unico_componente(self):
        """Sob -x, {0 +N} só cabe em {0 -N}; sem ele o par fica descoberto"""
        sys_ = AffineSystem.make(0, [(-1, 0)])
        invariant = SemiLinearSet.of([LinearSet1D.nat(0, 1), LinearSet1D.nat(0, -1)])
        self.assertIsInstance(check_inductive(invariant, sys_), Certificate)
        failure = check_inductive(SemiLinearSet.of([LinearSet1D.nat(0, 1)]), sys_)
        self.assertEqual(failure.reason, "closure")

    def test_primeiro_componente_que_cobre(self):
        sys_ = AffineSystem.make(0, [(3, 0)])
        invariant = SemiLinearSet.of([LinearSet1D.residue_class(0, 2), LinearSet1D.residue_class(0, 3)])
        rows = check_inductive(invariant, sys_).rows
        self.assertEqual(
            [(r.image.render(), r.within.render()) for r in rows],
            [("{0 +6Z}", "{0 +2Z}"), ("{0 +9Z}", "{0 +3Z}")],
        )

    def test_invariante_grande(self):
        step = 5_000
        sys_ = AffineSystem.make(0, [(1, step)])
        invariant = SemiLinearSet.of(LinearSet1D.nat(r, step) for r in range(step))
        started = time.perf_counter()
        certificate = check_inductive(invariant, sys_)
        self.assertLess(time.perf_counter() - started, 5.0)
        self.assertEqual(len(certificate.rows), step)
        self.assertTrue(all(row.within == row.source for row in certificate.rows))

    def test_sistema_linear(self):
        target = LatticeCoset.make([0, 1], [[3, 0], [0, 1]])
        sys_ = LinearSystem.make([1, 1], [[[1, -3], [0, 1]], [[2, 0], [0, 1]]], target)
        strongest = SemiLinearSet.of([LatticeCoset.make([0, 1], [[1, 0]])])
        self.assertIsInstance(check_inductive(strongest, sys_, check_target=False), Certificate)
        self.assertEqual(check_inductive(strongest, sys_).reason, "target")


class TestTestemunhas(unittest.TestCase):
    """
    🧾 Testes de find_witness e replay
    """

    def test_palavra_mais_curta(self):
        sys_ = AffineSystem.make(1, [(1, 1), (2, 0)], 8)
        witness = find_witness(sys_)
        self.assertEqual(len(witness.word), 3)
        self.assertEqual(witness.trace[-1], 8)
        self.assertTrue(witness_is_valid(sys_, witness))

    def test_inicio_no_alvo(self):
        witness = find_witness(AffineSystem.make(4, [(1, 1)], 4))
        self.assertEqual(witness.word, ())
        self.assertEqual(witness.render(), "4")

    def test_orcamento_esgotado(self):
        self.assertIsNone(find_witness(MU, budget=500))

    def test_orbita_finita_sem_alvo(self):
        self.assertIsNone(find_witness(AffineSystem.make(3, [(-1, 4)], 10)))

    def test_sistema_linear(self):
        sys_ = LinearSystem.make([1, 0], [[[0, 1], [1, 0]]], [0, 1])
        witness = find_witness(sys_)
        self.assertEqual(witness.render(), "(1, 0) -> (0, 1)")

    def test_replay_e_validacao(self):
        sys_ = AffineSystem.make(1, [(1, 1), (2, 0)], 6)
        self.assertEqual(replay(sys_, (1, 0, 1)), (1, 2, 3, 6))
        self.assertTrue(witness_is_valid(sys_, Witness(word=(1, 0, 1), trace=(1, 2, 3, 6))))
        self.assertFalse(witness_is_valid(sys_, Witness(word=(1, 0), trace=(1, 2, 3))))

    def test_amostra_da_orbita(self):
        sample = orbit_sample(AffineSystem.make(0, [(1, 1)]), 10)
        self.assertEqual(sample, list(range(10)))


class TestFormatador(unittest.TestCase):
    """
    🎨 Testes da tabela de prova e do relatório
    """

    def test_tabela(self):
        table = render_table(["a", "bb"], [["xyz", "1"], ["", "22"]])
        self.assertEqual(table.splitlines(), ["a    bb", "---  --", "xyz  1", "     22"])

    def test_tabela_unicode(self):
        certificate = check_inductive(MU_INVARIANT, MU)
        table = ReportFormatter(unicode=True).proof_table(certificate)
        self.assertIn("⊆", table)
        self.assertNotIn("<=", table)

    def test_relatorio_sem_tempos(self):
        certificate = check_inductive(MU_INVARIANT, MU)
        formatter = ReportFormatter(show_proof=False, show_timing=False)
        text = formatter.report(MU.describe(), None, MU_INVARIANT, certificate=certificate, timings={"invariant": 0.1})
        self.assertEqual(text.splitlines(), [
            "-----------------",
            "Interpretation of input",
            "start: 1 target: {0} functions: [f(x) = x - 3, f(x) = 2x]",
            "-----------------",
            "invariant: {1 +3Z} U {2 +3Z}",
            "-----------------",
        ])


if __name__ == "__main__":
    unittest.main()
