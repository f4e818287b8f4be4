#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
⏱️ Runner - Benchmark estatístico sobre instâncias geradas

Para cada tamanho e cada combinação de tipos roda N instâncias: síntese
e decisão (tempo de construção), verificação do certificado (tempo de
prova) nos casos inalcançáveis e busca de testemunha nos alcançáveis.
Cada instância é pura; a agregação em pandas é o único ponto de
serialização.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from porous.bench.generator import all_combos, combo_mask, gen_random
from porous.config.settings import get_settings
from porous.core.exceptions import PorousError, PreconditionError
from porous.proof.cert import Certificate, check_inductive, find_witness
from porous.synthesis.affine1d import decide

logger = logging.getLogger(__name__)

DEFAULT_SIZES = (8, 16, 32, 64, 128, 256, 512, 1024)
SEED_STRIDE = 100_003

COLUMNS = [
    "size",
    "instances",
    "build_time_mean",
    "build_time_max",
    "build_time_median",
    "proof_time_mean",
    "proof_time_max",
    "unreachable",
    "reachable",
    "witness_found",
    "witness_timeouts",
    "invalid_certificates",
    "cumulative_instances",
]


@dataclass(frozen=True)
class BenchTask:
    """Uma instância a executar: semente, tamanho e máscara da combinação."""

    seed: int
    size: int
    mask: int
    witness_budget: int


@dataclass(frozen=True)
class BenchOutcome:
    """
    📊 Resultado de uma instância

    proof_time é 0 para veredictos alcançáveis; witness_found só é
    significativo para eles.
    """

    size: int
    mask: int
    seed: int
    reachable: bool
    build_time: float
    proof_time: float
    witness_found: bool
    certificate_valid: bool


def run_instance(task: BenchTask) -> BenchOutcome:
    combo = next(c for c in all_combos() if combo_mask(c) == task.mask)
    sys = gen_random(task.seed, task.size, combo)

    started = time.perf_counter()
    decision = decide(sys)
    build_time = time.perf_counter() - started

    proof_time = 0.0
    witness_found = False
    certificate_valid = True
    if decision.reachable:
        witness_found = find_witness(sys, task.witness_budget) is not None
    else:
        started = time.perf_counter()
        certificate_valid = isinstance(check_inductive(decision.invariant, sys), Certificate)
        proof_time = time.perf_counter() - started
        if not certificate_valid:
            logger.error(f"Certificado inválido: {sys.describe()}")

    return BenchOutcome(
        size=task.size,
        mask=task.mask,
        seed=task.seed,
        reachable=decision.reachable,
        build_time=build_time,
        proof_time=proof_time,
        witness_found=witness_found,
        certificate_valid=certificate_valid,
    )


def build_tasks(sizes: Iterable[int], per_combo: int, seed: int, witness_budget: int) -> List[BenchTask]:
    if per_combo < 1:
        raise PreconditionError("run_bench", f"per_combo deve ser positivo, recebido {per_combo}")
    masks = [combo_mask(c) for c in all_combos()]
    return [
        BenchTask(seed=seed * SEED_STRIDE + i, size=size, mask=mask, witness_budget=witness_budget)
        for size in sizes
        for mask in masks
        for i in range(per_combo)
    ]


def _execute(tasks: Sequence[BenchTask], workers: int, progress: bool) -> List[BenchOutcome]:
    outcomes: List[BenchOutcome] = []
    with tqdm(total=len(tasks), desc="bench", unit="inst", disable=not progress) as bar:
        if workers <= 1:
            for task in tasks:
                outcomes.append(run_instance(task))
                bar.update(1)
            return outcomes

        with ProcessPoolExecutor(max_workers=workers) as executor:
            future_to_task = {executor.submit(run_instance, task): task for task in tasks}
            for future in as_completed(future_to_task):
                outcomes.append(future.result())
                bar.update(1)
    return outcomes


def summarize(outcomes: Sequence[BenchOutcome]) -> pd.DataFrame:
    """
    Agrega resultados por tamanho e acrescenta a linha 'all'

    unreachable + reachable = instances em todas as linhas e
    cumulative_instances é não decrescente.
    """
    frame = pd.DataFrame([asdict(o) for o in outcomes])
    frame["unreachable"] = ~frame["reachable"]
    frame["witness_timeout"] = frame["reachable"] & ~frame["witness_found"]
    frame["invalid_certificate"] = ~frame["certificate_valid"]
    unreachable = frame[~frame["reachable"]]

    def row(label: Union[int, str], part: pd.DataFrame, proofs: pd.DataFrame) -> Dict[str, object]:
        return {
            "size": label,
            "instances": len(part),
            "build_time_mean": part["build_time"].mean(),
            "build_time_max": part["build_time"].max(),
            "build_time_median": part["build_time"].median(),
            "proof_time_mean": proofs["proof_time"].mean() if len(proofs) else 0.0,
            "proof_time_max": proofs["proof_time"].max() if len(proofs) else 0.0,
            "unreachable": int(part["unreachable"].sum()),
            "reachable": int(part["reachable"].sum()),
            "witness_found": int((part["reachable"] & part["witness_found"]).sum()),
            "witness_timeouts": int(part["witness_timeout"].sum()),
            "invalid_certificates": int(part["invalid_certificate"].sum()),
        }

    rows = [
        row(size, part, unreachable[unreachable["size"] == size])
        for size, part in frame.groupby("size", sort=True)
    ]
    summary = pd.DataFrame(rows)
    summary["cumulative_instances"] = summary["instances"].cumsum()

    total = row("all", frame, unreachable)
    total["cumulative_instances"] = len(frame)
    summary = pd.concat([summary, pd.DataFrame([total])], ignore_index=True)
    return summary[COLUMNS]


def run_bench(
    sizes: Sequence[int] = DEFAULT_SIZES,
    per_combo: int = 10,
    seed: int = 0,
    out: Optional[Union[str, Path]] = None,
    workers: Optional[int] = None,
    witness_budget: Optional[int] = None,
    progress: bool = True,
) -> pd.DataFrame:
    """
    Executa o benchmark e grava o CSV agregado

    Args:
        sizes: Tamanhos das instâncias
        per_combo: Instâncias por combinação de tipos e tamanho
        seed: Semente base
        out: Caminho do CSV (None não grava)
        workers: Processos paralelos (padrão da configuração)
        witness_budget: Nós por busca de testemunha (padrão da configuração)
        progress: Exibir barra de progresso

    Returns:
        DataFrame com uma linha por tamanho mais a linha 'all'
    """
    settings = get_settings()
    workers = settings.bench_workers if workers is None else workers
    budget = settings.bench_witness_budget if witness_budget is None else witness_budget

    tasks = build_tasks(sizes, per_combo, seed, budget)
    logger.info(f"Benchmark: {len(tasks)} instâncias, {workers} processo(s)")
    outcomes = _execute(tasks, workers, progress)
    summary = summarize(outcomes)

    invalid = int(summary.iloc[-1]["invalid_certificates"])
    if invalid:
        logger.error(f"{invalid} certificado(s) inválido(s) no benchmark")

    if out is not None:
        try:
            Path(out).parent.mkdir(parents=True, exist_ok=True)
            summary.to_csv(out, index=False)
        except OSError as e:
            raise PorousError(f"Falha ao gravar {out}: {e}", suggestion="Verifique o caminho e as permissões")
        logger.info(f"CSV gravado em {out}")
    return summary
