#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📥 Instance - Leitura e escrita de instâncias

Dois formatos:

- 1-D, orientado a linhas::

    start: 1
    target: 0            # ou "0 mod 3", "{0}", "{0 +3Z}"
    functions: x - 3 ; 2*x

  Funções podem vir na mesma linha (separadas por ';' ou ','), entre
  colchetes, com prefixo opcional 'f(x) =' ou uma por linha após
  'functions:'.

- d-D, documento YAML ou JSON validado por pydantic::

    x0: [1, 0]
    matrices: [[[1, 2], [0, 1]]]
    target: {base: [0, 1], periods: [[2, 0], [0, 2]]}
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from porous.algebra.intlat import LatticeCoset
from porous.core.exceptions import ParseError
from porous.core.models import AffineFn, AffineSystem, LinearSystem, PointTarget, Target, ZClassTarget

logger = logging.getLogger(__name__)

Instance = Union[AffineSystem, LinearSystem]

_KEY = re.compile(r"^\s*(start|target|functions)\s*:(.*)$")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x)|(?P<op>[+\-*]))")
_PREFIX = re.compile(r"^\s*f\s*\(\s*x\s*\)\s*=")
_INT = r"-?\d+"
_POINT = re.compile(rf"^\{{?\s*({_INT})\s*\}}?$")
_MOD = re.compile(rf"^({_INT})\s+mod\s+(\d+)$")
_ZCLASS = re.compile(rf"^\{{\s*({_INT})\s*\+\s*(\d*)\s*Z\s*\}}$")


class CosetDocument(BaseModel):
    """Alvo Z-linear: base + combinações inteiras dos períodos."""

    base: List[int]
    periods: List[List[int]] = Field(default_factory=list)


class SystemDocument(BaseModel):
    """
    📄 Documento de um sistema linear d-dimensional

    target pode ser um ponto (lista de inteiros) ou um CosetDocument.
    """

    x0: List[int]
    matrices: List[List[List[int]]]
    target: Optional[Union[List[int], CosetDocument]] = None

    @field_validator("x0")
    @classmethod
    def non_empty(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("x0 não pode ser vazio")
        return value

    @field_validator("matrices")
    @classmethod
    def at_least_one(cls, value: List[List[List[int]]]) -> List[List[List[int]]]:
        if not value:
            raise ValueError("ao menos uma matriz é necessária")
        return value

    def to_system(self) -> LinearSystem:
        target = self.target
        if isinstance(target, CosetDocument):
            target = LatticeCoset.make(target.base, target.periods)
        return LinearSystem.make(self.x0, self.matrices, target)


def parse_expression(text: str, line: int = 0, offset: int = 0) -> AffineFn:
    """
    Lê uma expressão afim como '2*x - 3', '-x', 'x+4' ou '7'

    Args:
        text: Expressão (prefixo 'f(x) =' opcional)
        line: Linha no arquivo, para mensagens de erro
        offset: Coluna onde a expressão começa

    Returns:
        AffineFn com os coeficientes somados termo a termo
    """
    prefix = _PREFIX.match(text)
    pos = prefix.end() if prefix else 0
    a = b = 0
    terms = 0
    end = len(text.rstrip())

    while pos < end:
        sign = 1
        coefficient: Optional[int] = None
        variable = False
        token = _TOKEN.match(text, pos)

        # sinal explícito; obrigatório entre termos
        if token and token.group("op") in ("+", "-"):
            sign = -1 if token.group("op") == "-" else 1
            pos = token.end()
            token = _TOKEN.match(text, pos)
        elif terms:
            raise ParseError(f"esperado '+' ou '-' em '{text.strip()}'", line, offset + pos + 1)

        if token and token.group("num"):
            coefficient = int(token.group("num"))
            pos = token.end()
            token = _TOKEN.match(text, pos)
            if token and token.group("op") == "*":
                pos = token.end()
                token = _TOKEN.match(text, pos)
                if not (token and token.group("var")):
                    raise ParseError(f"esperado 'x' após '*' em '{text.strip()}'", line, offset + pos + 1)
        if token and token.group("var"):
            variable = True
            pos = token.end()

        if coefficient is None and not variable:
            column = offset + len(text) - len(text[pos:].lstrip()) + 1
            raise ParseError(
                f"termo inválido em '{text.strip()}'",
                line,
                column,
                suggestion="Use a forma 'a*x + b', ex.: '2*x - 3'",
            )
        value = sign * (1 if coefficient is None else coefficient)
        if variable:
            a += value
        else:
            b += value
        terms += 1

    if not terms:
        raise ParseError("expressão vazia", line, offset + 1)
    return AffineFn(a, b)


def parse_target(text: str, line: int = 0) -> Target:
    """Alvo 1-D: '0', '{0}', '0 mod 3' ou '{0 +3Z}'."""
    text = text.strip()
    point = _POINT.match(text)
    if point:
        return PointTarget(int(point.group(1)))
    for pattern in (_MOD, _ZCLASS):
        match = pattern.match(text)
        if match:
            modulus = int(match.group(2) or 1)
            if modulus == 0:
                raise ParseError("módulo deve ser positivo", line, 1)
            return ZClassTarget(int(match.group(1)), modulus)
    raise ParseError(f"alvo inválido: '{text}'", line, 1, suggestion="Use 'target: 0' ou 'target: 0 mod 3'")


def _split_functions(text: str, line: int, column: int) -> List[Tuple[str, int]]:
    body = text
    stripped = body.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ParseError("colchete não fechado em 'functions'", line, column + len(body))
        start = body.index("[") + 1
        body = " " * start + body[start:body.rindex("]")]
    pieces: List[Tuple[str, int]] = []
    cursor = 0
    for piece in re.split(r"[;,]", body):
        if piece.strip():
            pieces.append((piece, column + cursor))
        cursor += len(piece) + 1
    return pieces


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def parse_affine_text(text: str) -> AffineSystem:
    """
    Lê uma instância 1-D no formato orientado a linhas

    Raises:
        ParseError: chave desconhecida, expressão inválida, chave ausente
            ou lista de funções vazia
    """
    values: Dict[str, str] = {}
    functions: List[AffineFn] = []
    in_functions = False

    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        if not content.strip():
            continue
        key = _KEY.match(content)
        if key:
            name, rest = key.group(1), key.group(2)
            if name in values:
                raise ParseError(f"chave '{name}' repetida", number, 1)
            values[name] = rest
            in_functions = name == "functions"
            if in_functions:
                offset = key.start(2)
                functions.extend(parse_expression(p, number, c) for p, c in _split_functions(rest, number, offset))
            continue
        if not in_functions:
            raise ParseError(
                f"linha não reconhecida: '{content.strip()}'",
                number,
                len(content) - len(content.lstrip()) + 1,
                suggestion="Chaves válidas: start, target, functions",
            )
        functions.extend(parse_expression(p, number, c) for p, c in _split_functions(content, number, 0))

    for required in ("start", "functions"):
        if required not in values:
            raise ParseError(f"chave '{required}' ausente")
    if not functions:
        raise ParseError("lista de funções vazia", suggestion="Informe ao menos uma função após 'functions:'")

    start_text = values["start"].strip()
    if not re.fullmatch(_INT, start_text):
        raise ParseError(f"início inválido: '{start_text}'", 0, 1)
    target = None
    if values.get("target", "").strip():
        target = parse_target(values["target"])
    return AffineSystem(start=int(start_text), fns=tuple(functions), target=target)


def parse_system_document(text: str) -> LinearSystem:
    """Lê um documento YAML/JSON de sistema linear d-dimensional."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark else 0
        column = mark.column + 1 if mark else 0
        raise ParseError(f"documento inválido: {e}", line, column)
    if not isinstance(data, dict):
        raise ParseError("documento deve ser um objeto com x0 e matrices")
    try:
        document = SystemDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"campo '{where}': {first['msg']}")
    return document.to_system()


def _looks_like_document(text: str) -> bool:
    return re.search(r"^\s*\{?\s*[\"']?x0[\"']?\s*:", text, re.MULTILINE) is not None


def parse_instance(text: str, fmt: Optional[str] = None) -> Instance:
    """
    Lê uma instância 1-D ou d-D

    Args:
        text: Conteúdo do arquivo
        fmt: 'affine' ou 'linear'; None detecta pela presença de 'x0'

    Returns:
        AffineSystem ou LinearSystem
    """
    kind = fmt or ("linear" if _looks_like_document(text) else "affine")
    logger.debug(f"Instância lida como '{kind}'")
    if kind == "linear":
        return parse_system_document(text)
    return parse_affine_text(text)


def load_instance(path: Union[str, Path], fmt: Optional[str] = None) -> Instance:
    text = Path(path).read_text(encoding="utf-8")
    if fmt is None and Path(path).suffix.lower() in (".yaml", ".yml", ".json"):
        fmt = "linear"
    return parse_instance(text, fmt)


def _render_target(target: Target) -> str:
    if isinstance(target, PointTarget):
        return str(target.value)
    return f"{target.residue} mod {target.modulus}"


def render_instance(instance: Instance) -> str:
    """Texto que `parse_instance` lê de volta para a mesma instância."""
    if isinstance(instance, AffineSystem):
        lines = [f"start: {instance.start}"]
        if instance.target is not None:
            lines.append(f"target: {_render_target(instance.target)}")
        lines.append("functions: " + " ; ".join(f.expression(star=True) for f in instance.fns))
        return "\n".join(lines) + "\n"

    document: Dict[str, object] = {
        "x0": list(instance.x0),
        "matrices": [[list(row) for row in m] for m in instance.matrices],
    }
    if isinstance(instance.target, LatticeCoset):
        document["target"] = {
            "base": list(instance.target.base),
            "periods": [list(p) for p in instance.target.periods],
        }
    elif instance.target is not None:
        document["target"] = list(instance.target)
    return yaml.safe_dump(document, default_flow_style=None, sort_keys=False)
