#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧰 Commands - Execução dos subcomandos sobre instâncias já lidas

Cada comando devolve um CommandResult (texto do relatório + código de
saída); a camada argparse só lê arquivos, imprime e sai.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from porous.algebra.intlat import LatticeCoset, coset_intersects, coset_member
from porous.algebra.semilinear import SemiLinearSet
from porous.config.settings import get_settings
from porous.core.exceptions import CertificateError, PreconditionError, ResourceLimitError
from porous.core.models import AffineSystem, Decision, LinearSystem, Reachability, Witness
from porous.proof.cert import Certificate, CertificateFailure, check_inductive, find_witness
from porous.proof.formatter import ReportFormatter
from porous.synthesis.affine1d import decide, invariant_for
from porous.synthesis.zinv import strongest_zlinear_invariant
from porous.synthesis.ztarget import decide_zlinear_target

logger = logging.getLogger(__name__)

EXIT_DONE = 0
EXIT_RESOURCE = 3


@dataclass
class CommandResult:
    """
    📤 Resultado de um subcomando

    text é o relatório completo; decision e certificate ficam disponíveis
    para testes e para o benchmark.
    """

    text: str
    exit_code: int = EXIT_DONE
    decision: Optional[Decision] = None
    certificate: Optional[Certificate] = None
    timings: Dict[str, float] = field(default_factory=dict)


def _formatter(proof: bool, unicode: Optional[bool], timing: bool) -> ReportFormatter:
    if unicode is None:
        unicode = get_settings().unicode_output
    return ReportFormatter(unicode=unicode, show_proof=proof, show_timing=timing)


def _certify(invariant: SemiLinearSet, sys, check_target: bool) -> Certificate:
    result = check_inductive(invariant, sys, check_target=check_target)
    if isinstance(result, CertificateFailure):
        raise CertificateError(result.reason, result.describe())
    return result


def _target_text(sys: Union[AffineSystem, LinearSystem]) -> Optional[str]:
    if isinstance(sys, AffineSystem):
        return sys.target.render() if sys.target is not None else None
    return sys.render_target() if sys.target is not None else None


def _search_witness(sys, budget: Optional[int]) -> Witness:
    limit = get_settings().witness_budget if budget is None else budget
    witness = find_witness(sys, limit)
    if witness is None:
        raise ResourceLimitError(
            "witness_budget",
            "alvo alcançável, mas nenhuma testemunha encontrada no orçamento",
            limit=limit,
            suggestion="Aumente --witness-budget ou POROUS_WITNESS_BUDGET",
        )
    return witness


def _decide_affine(sys: AffineSystem, witness_budget: Optional[int]) -> Decision:
    decision = decide(sys)
    if decision.reachable and decision.witness is None:
        witness = _search_witness(sys, witness_budget)
        decision = Decision(status=decision.status, invariant=decision.invariant, witness=witness)
    return decision


def _decide_linear(sys: LinearSystem, witness_budget: Optional[int]) -> Decision:
    """Alvo de dimensão cheia: decisão exata; demais alvos: invariante mais forte e busca de testemunha."""
    target = sys.target
    if isinstance(target, LatticeCoset) and target.lattice.is_full:
        return decide_zlinear_target(sys, target)

    invariant = strongest_zlinear_invariant(sys)
    if isinstance(target, LatticeCoset):
        separated = not coset_intersects(invariant, target)
    else:
        separated = not coset_member(invariant, target)
    if separated:
        return Decision(status=Reachability.UNREACHABLE, invariant=SemiLinearSet.of([invariant]))

    logger.info("Alvo intersecta o invariante Z-linear mais forte; buscando testemunha")
    witness = _search_witness(sys, witness_budget)
    return Decision(status=Reachability.REACHABLE, invariant=SemiLinearSet.of([invariant]), witness=witness)


def run_check(
    sys: Union[AffineSystem, LinearSystem],
    proof: bool = False,
    witness_budget: Optional[int] = None,
    unicode: Optional[bool] = None,
    timing: bool = True,
) -> CommandResult:
    """
    Sintetiza o invariante, decide o alvo e verifica o certificado

    Args:
        sys: Instância lida
        proof: Incluir a tabela de prova
        witness_budget: Nós da busca de testemunha (padrão da configuração)
        unicode: Glifos ∪/⊆ (None lê a configuração)
        timing: Incluir a seção de tempos

    Returns:
        CommandResult com código 0

    Raises:
        ResourceLimitError: alvo alcançável sem testemunha no orçamento ou
            espaço residual acima do limite
        CertificateError: o verificador rejeitou o invariante produzido
    """
    formatter = _formatter(proof, unicode, timing)
    timings: Dict[str, float] = {}

    started = time.perf_counter()
    if sys.target is None:
        decision = None
        if isinstance(sys, AffineSystem):
            invariant = invariant_for(sys)
        else:
            invariant = SemiLinearSet.of([strongest_zlinear_invariant(sys)])
    elif isinstance(sys, AffineSystem):
        decision = _decide_affine(sys, witness_budget)
        invariant = decision.invariant
    else:
        decision = _decide_linear(sys, witness_budget)
        invariant = decision.invariant
    timings["invariant"] = time.perf_counter() - started

    certificate = None
    if invariant is not None:
        started = time.perf_counter()
        check_target = decision is not None and not decision.reachable
        certificate = _certify(invariant, sys, check_target)
        timings["proofOfInvariant"] = time.perf_counter() - started

    text = formatter.report(
        interpretation=sys.describe(),
        decision=decision,
        invariant=invariant,
        target_text=_target_text(sys),
        witness=decision.witness if decision is not None else None,
        certificate=certificate,
        timings=timings,
    )
    return CommandResult(text=text, decision=decision, certificate=certificate, timings=timings)


def _require_linear(sys, command: str) -> LinearSystem:
    if not isinstance(sys, LinearSystem):
        raise PreconditionError(command, "requer um sistema linear d-dimensional (documento com x0 e matrices)")
    return sys


def run_strongest(sys: LinearSystem, proof: bool = True, unicode: Optional[bool] = None, timing: bool = True) -> CommandResult:
    """Invariante Z-linear mais forte de um LDS, com tabela de prova."""
    sys = _require_linear(sys, "strongest-zlinear")
    formatter = _formatter(proof, unicode, timing)

    started = time.perf_counter()
    invariant = SemiLinearSet.of([strongest_zlinear_invariant(sys)])
    timings = {"invariant": time.perf_counter() - started}

    started = time.perf_counter()
    certificate = _certify(invariant, sys, check_target=False)
    timings["proofOfInvariant"] = time.perf_counter() - started

    text = formatter.report(sys.describe(), None, invariant, certificate=certificate, timings=timings)
    return CommandResult(text=text, certificate=certificate, timings=timings)


def run_ztarget(sys: LinearSystem, proof: bool = False, unicode: Optional[bool] = None, timing: bool = True) -> CommandResult:
    """Decisão exata para alvo Z-linear de dimensão cheia."""
    sys = _require_linear(sys, "ztarget")
    if not isinstance(sys.target, LatticeCoset):
        raise PreconditionError("ztarget", "o alvo deve ser um conjunto Z-linear (base e periods)")
    formatter = _formatter(proof, unicode, timing)

    started = time.perf_counter()
    decision = decide_zlinear_target(sys, sys.target)
    timings = {"invariant": time.perf_counter() - started}

    certificate = None
    if not decision.reachable:
        started = time.perf_counter()
        certificate = _certify(decision.invariant, sys, check_target=True)
        timings["proofOfInvariant"] = time.perf_counter() - started

    text = formatter.report(
        sys.describe(),
        decision,
        decision.invariant,
        target_text=sys.render_target(),
        witness=decision.witness,
        certificate=certificate,
        timings=timings,
    )
    return CommandResult(text=text, decision=decision, certificate=certificate, timings=timings)
