#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🚀 Main - Interface de linha de comando do porous

Subcomandos:

- check: invariante, veredicto, testemunha e tabela de prova
- strongest-zlinear: invariante Z-linear mais forte de um LDS
- ztarget: alcançabilidade de alvo Z-linear de dimensão cheia
- gen: imprime uma instância aleatória do gerador do benchmark
- bench: tabela estatística em CSV
"""

import argparse
import logging
import sys
from typing import List, Optional

from porous.bench.generator import ALL_TYPES, FunctionType, gen_random
from porous.bench.runner import DEFAULT_SIZES, run_bench
from porous.cli.commands import run_check, run_strongest, run_ztarget
from porous.cli.instance import load_instance, render_instance
from porous.config.settings import get_settings, reset_settings
from porous.core.exceptions import create_user_friendly_error, get_exit_code

logger = logging.getLogger("porous")

EPILOG = """
Exemplos de uso:
  python -m porous check instances/mu_puzzle.txt --proof
  python -m porous check instances/mu_puzzle.txt --unicode --no-timing
  python -m porous strongest-zlinear instances/mu_puzzle_2d.yaml
  python -m porous ztarget instances/mu_puzzle_2d.yaml
  python -m porous gen --seed 1 --size 8 --types pos_counter growing
  python -m porous bench --sizes 8 16 --per-combo 2 --seed 0 --out bench.csv
"""


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    glyphs = parser.add_mutually_exclusive_group()
    glyphs.add_argument('--ascii', dest='unicode', action='store_false', default=None, help='Saída ASCII (U, <=)')
    glyphs.add_argument('--unicode', dest='unicode', action='store_true', help='Saída com glifos ∪ e ⊆')
    parser.add_argument('--no-timing', action='store_true', help='Omite a seção de tempos')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="porous",
        description="🧮 porous - Invariantes semi-lineares e alcançabilidade para sistemas afins e lineares inteiros",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='Ativa logs de depuração')
    parser.add_argument('--config', '-c', type=str, help='Arquivo de configuração JSON')
    subparsers = parser.add_subparsers(dest='command', required=True)

    check = subparsers.add_parser('check', help='Decide a alcançabilidade do alvo de uma instância')
    check.add_argument('file', help='Instância 1-D (texto) ou d-D (YAML/JSON)')
    check.add_argument('--proof', action='store_true', help='Inclui a tabela de prova de invariância')
    check.add_argument('--witness-budget', type=int, help='Máximo de nós na busca de testemunha')
    _add_output_flags(check)

    strongest = subparsers.add_parser('strongest-zlinear', help='Invariante Z-linear mais forte de um LDS')
    strongest.add_argument('file', help='Documento YAML/JSON com x0 e matrices')
    _add_output_flags(strongest)

    ztarget = subparsers.add_parser('ztarget', help='Decide alvo Z-linear de dimensão cheia')
    ztarget.add_argument('file', help='Documento YAML/JSON com x0, matrices e target {base, periods}')
    ztarget.add_argument('--proof', action='store_true', help='Inclui a tabela de prova de invariância')
    _add_output_flags(ztarget)

    gen = subparsers.add_parser('gen', help='Imprime uma instância aleatória reprodutível')
    gen.add_argument('--seed', type=int, default=0, help='Semente (padrão: 0)')
    gen.add_argument('--size', type=int, default=8, help='Parâmetro de tamanho (padrão: 8)')
    gen.add_argument(
        '--types',
        nargs='+',
        choices=[t.value for t in FunctionType],
        default=[t.value for t in ALL_TYPES],
        help='Tipos de função incluídos (padrão: todos)',
    )

    bench = subparsers.add_parser('bench', help='Executa o benchmark e grava o CSV')
    bench.add_argument('--sizes', type=int, nargs='+', default=list(DEFAULT_SIZES), help='Tamanhos (padrão: 8 ... 1024)')
    bench.add_argument('--per-combo', type=int, default=10, help='Instâncias por combinação de tipos (padrão: 10)')
    bench.add_argument('--seed', type=int, default=0, help='Semente base (padrão: 0)')
    bench.add_argument('--out', required=True, help='Arquivo CSV de saída')
    bench.add_argument('--workers', type=int, help='Processos paralelos (padrão da configuração)')
    bench.add_argument('--witness-budget', type=int, help='Máximo de nós por busca de testemunha')

    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s | %(levelname)s | %(message)s',
        stream=sys.stderr,
    )


def dispatch(args: argparse.Namespace) -> int:
    if args.command == 'gen':
        types = frozenset(FunctionType(t) for t in args.types)
        sys.stdout.write(render_instance(gen_random(args.seed, args.size, types)))
        return 0

    if args.command == 'bench':
        frame = run_bench(
            sizes=args.sizes,
            per_combo=args.per_combo,
            seed=args.seed,
            out=args.out,
            workers=args.workers,
            witness_budget=args.witness_budget,
        )
        sys.stdout.write(frame.to_string(index=False) + "\n")
        return 0

    instance = load_instance(args.file)
    timing = not args.no_timing
    if args.command == 'check':
        result = run_check(instance, args.proof, args.witness_budget, args.unicode, timing)
    elif args.command == 'strongest-zlinear':
        result = run_strongest(instance, True, args.unicode, timing)
    else:
        result = run_ztarget(instance, args.proof, args.unicode, timing)
    sys.stdout.write(result.text)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ponto de entrada da CLI

    Returns:
        0 análise completa, 2 erro de entrada ou pré-condição, 3 limite de
        recurso, 4 certificado rejeitado, 1 erro inesperado
    """
    args = build_parser().parse_args(argv)
    try:
        if args.config:
            reset_settings(args.config)
        configure_logging(args.verbose)
        return dispatch(args)
    except KeyboardInterrupt:
        logger.warning("Execução interrompida pelo usuário")
        return 130
    except Exception as e:
        sys.stderr.write(create_user_friendly_error(e) + "\n")
        if args.verbose:
            logger.exception("Detalhes do erro")
        return get_exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
