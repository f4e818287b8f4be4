#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
⚠️ Exceptions - Exceções customizadas do porous

Este módulo define as exceções específicas do sistema, permitindo
tratamento de erros granular e mapeamento direto para códigos de saída
da linha de comando.
"""

from typing import Optional, Dict, Any


class PorousError(Exception):
    """
    🚨 Exceção base do porous

    Todas as exceções específicas do sistema herdam desta classe,
    permitindo captura genérica na CLI.
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None, suggestion: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.suggestion = suggestion

    def __str__(self) -> str:
        result = f"❌ {self.message}"
        if self.suggestion:
            result += f"\n💡 Sugestão: {self.suggestion}"
        return result

    def get_formatted_error(self) -> str:
        """
        Retorna erro formatado para exibição ao usuário

        Returns:
            Mensagem de erro formatada com emoji e sugestão
        """
        return str(self)


class ConfigurationError(PorousError):
    """
    🔧 Erro de configuração

    Lançado quando um valor de configuração não pode ser usado.
    """

    def __init__(self, field: str, message: str, current_value: Any = None, suggestion: Optional[str] = None):
        self.field = field
        self.current_value = current_value

        details = {"field": field}
        if current_value is not None:
            details["current_value"] = current_value

        super().__init__(
            message=f"Erro na configuração '{field}': {message}",
            details=details,
            suggestion=suggestion
        )


class ParseError(PorousError):
    """
    📝 Erro de sintaxe em arquivo de instância

    Carrega linha e coluna (ambas a partir de 1) do ponto do erro.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, suggestion: Optional[str] = None):
        self.line = line
        self.column = column

        location = f"linha {line}, coluna {column}" if line else "documento"
        super().__init__(
            message=f"Erro de sintaxe ({location}): {message}",
            details={"line": line, "column": column},
            suggestion=suggestion
        )


class DimensionMismatchError(PorousError):
    """
    📐 Erro de dimensão

    Lançado quando vetores ou matrizes de dimensões incompatíveis
    são combinados.
    """

    def __init__(self, operation: str, expected: int, found: int, suggestion: Optional[str] = None):
        self.operation = operation
        self.expected = expected
        self.found = found

        super().__init__(
            message=f"Dimensões incompatíveis em {operation}: esperado {expected}, encontrado {found}",
            details={"operation": operation, "expected": expected, "found": found},
            suggestion=suggestion or "Verifique se todos os vetores e matrizes têm a mesma dimensão"
        )


class PreconditionError(PorousError):
    """
    ✅ Erro de pré-condição

    Lançado quando uma operação recebe argumentos fora do seu domínio.
    """

    def __init__(self, operation: str, message: str, suggestion: Optional[str] = None):
        self.operation = operation

        super().__init__(
            message=f"Pré-condição violada em {operation}: {message}",
            details={"operation": operation},
            suggestion=suggestion
        )


class NotFullDimensionalError(PreconditionError):
    """
    🧭 Alvo Z-linear sem dimensão cheia

    Alcançabilidade de alvos Z-linear de dimensão incompleta é tão difícil
    quanto o problema de Skolem; nenhuma decisão é tentada.
    """

    def __init__(self, rank: int, dim: int):
        self.rank = rank
        self.dim = dim

        super().__init__(
            operation="hybridize_target",
            message=f"o reticulado do alvo tem posto {rank} em dimensão {dim}",
            suggestion="Alvos sem dimensão cheia são Skolem-difíceis; use um alvo cujos períodos gerem todo o espaço"
        )


class ResourceLimitError(PorousError):
    """
    💾 Limite de recursos atingido

    Lançado quando uma busca excede o limite configurado de estados,
    nós ou volume de enumeração.
    """

    def __init__(self, resource: str, message: str, limit: Optional[int] = None, suggestion: Optional[str] = None):
        self.resource = resource
        self.limit = limit

        details: Dict[str, Any] = {"resource": resource}
        if limit is not None:
            details["limit"] = limit

        super().__init__(
            message=f"Limite de '{resource}' atingido: {message}",
            details=details,
            suggestion=suggestion or "Aumente o limite na configuração ou reduza a instância"
        )


class CertificateError(PorousError):
    """
    📜 Invariante sintetizado rejeitado pelo verificador

    Indica defeito interno: a síntese produziu um conjunto que não fecha
    sob as funções ou não separa o alvo.
    """

    def __init__(self, reason: str, message: str):
        self.reason = reason

        super().__init__(
            message=f"Certificado inválido ({reason}): {message}",
            details={"reason": reason},
            suggestion="Reporte a instância; o invariante não passou na verificação independente"
        )


# Mapeamento de exceções para códigos de saída da CLI
EXIT_CODES = {
    ConfigurationError: 2,
    ParseError: 2,
    DimensionMismatchError: 2,
    PreconditionError: 2,
    NotFullDimensionalError: 2,
    ResourceLimitError: 3,
    CertificateError: 4,
}


def get_exit_code(exception: Exception) -> int:
    """
    Obtém código de saída para uma exceção

    Args:
        exception: Exceção para obter código

    Returns:
        Código de saída (1 para exceções não mapeadas)
    """
    for exc_type in type(exception).__mro__:
        if exc_type in EXIT_CODES:
            return EXIT_CODES[exc_type]
    return 1


def create_user_friendly_error(exception: Exception) -> str:
    """
    Cria mensagem de erro amigável para o usuário

    Args:
        exception: Exceção para formatar

    Returns:
        Mensagem formatada para o usuário
    """
    if isinstance(exception, PorousError):
        return exception.get_formatted_error()

    error_type = type(exception).__name__
    return f"❌ Erro inesperado ({error_type}): {str(exception)}\n💡 Sugestão: Execute novamente com --verbose para detalhes"
