#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🎨 Formatter - Relatórios textuais e tabelas de prova

Layout fixo (testes dourados dependem dele): seções separadas por uma
régua de hífens, tabela de prova com colunas "Set / under / gives /
within" alinhadas à esquerda, duas colunas de espaço entre elas e
linhas sem espaços finais.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from porous.algebra.semilinear import SemiLinearSet, render_component
from porous.core.models import Decision, Witness
from porous.proof.cert import Certificate, render_fn

RULE = "-----------------"
SUBSET_ASCII = "<="
SUBSET_UNICODE = "⊆"


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Tabela alinhada à esquerda com régua de hífens sob o cabeçalho."""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    output = [line(headers), line(["-" * w for w in widths])]
    output.extend(line(row) for row in rows)
    return "\n".join(output)


@dataclass
class ReportFormatter:
    """
    🖨️ Formatador de relatórios do `check`

    Args:
        unicode: Usar os glifos ∪ e ⊆ em vez de U e <=
        show_proof: Incluir a tabela de prova de invariância
        show_timing: Incluir a seção de tempos
    """

    unicode: bool = False
    show_proof: bool = False
    show_timing: bool = True

    def proof_table(self, certificate: Certificate) -> str:
        sign = SUBSET_UNICODE if self.unicode else SUBSET_ASCII
        rows = [
            [render_component(r.source), render_fn(r.fn), render_component(r.image), sign, render_component(r.within)]
            for r in certificate.rows
        ]
        return render_table(["Set", "under", "gives", "", "within"], rows)

    def render_set(self, invariant: SemiLinearSet) -> str:
        return invariant.render(unicode=self.unicode)

    def report(
        self,
        interpretation: str,
        decision: Optional[Decision],
        invariant: Optional[SemiLinearSet],
        target_text: Optional[str] = None,
        witness: Optional[Witness] = None,
        certificate: Optional[Certificate] = None,
        timings: Optional[Dict[str, float]] = None,
    ) -> str:
        """
        Monta o relatório completo

        Args:
            interpretation: Eco da instância interpretada
            decision: Veredicto (None para comandos só de síntese)
            invariant: Invariante a exibir
            target_text: Alvo renderizado, para a linha de disjunção
            witness: Testemunha concreta para veredictos alcançáveis
            certificate: Certificado para a tabela de prova
            timings: Tempos nomeados em segundos

        Returns:
            Texto terminado em nova linha
        """
        sections: List[List[str]] = [["Interpretation of input", interpretation]]
        if invariant is not None:
            sections.append([f"invariant: {self.render_set(invariant)}"])

        if decision is not None:
            verdict = [f"reachability: {decision.status.value}"]
            if not decision.reachable and target_text is not None:
                verdict.append(f"target {target_text} disjoint from invariant")
            if witness is not None:
                verdict.append(f"witness: {witness.render()}")
            sections.append(verdict)

        if self.show_proof and certificate is not None:
            sections.append(["Proof of invariance", self.proof_table(certificate)])

        if self.show_timing and timings:
            sections.append([f"time {name} {seconds:.4f}s" for name, seconds in timings.items()])

        lines = [RULE]
        for section in sections:
            lines.extend(section)
            lines.append(RULE)
        return "\n".join(lines) + "\n"
