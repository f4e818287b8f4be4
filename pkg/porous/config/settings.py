#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
⚙️ Settings - Carregador de configurações do porous

Carregamento centralizado de limites e preferências com valores padrão
seguros, arquivo JSON opcional, variáveis de ambiente (incluindo `.env`)
e validação de limites numéricos.
"""

import json
import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from porous.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_FILE = str(PROJECT_ROOT / "config" / "porous_config.json")


@dataclass(frozen=True)
class PorousSettings:
    """
    🔧 Configuração efetiva do porous

    Todos os limites são contagens determinísticas (estados, nós, pontos),
    nunca tempos de relógio.
    """

    ztarget_state_cap: int = 1_000_000
    witness_budget: int = 1_000_000
    bench_witness_budget: int = 100_000
    orbit_check_budget: int = 10_000
    cone_max_generators: int = 6
    zonotope_box_cap: int = 1_000_000
    bench_workers: int = 1
    log_level: str = "INFO"
    unicode_output: bool = False


class ConfigLoader:
    """
    ⚙️ Carregador de configurações

    Ordem de precedência: padrões < arquivo JSON < variáveis de ambiente.
    Valores fora dos limites geram aviso e voltam ao padrão.
    """

    env_mapping = {
        "POROUS_ZTARGET_STATE_CAP": ("ztarget_state_cap", int),
        "POROUS_WITNESS_BUDGET": ("witness_budget", int),
        "POROUS_BENCH_WITNESS_BUDGET": ("bench_witness_budget", int),
        "POROUS_ORBIT_CHECK_BUDGET": ("orbit_check_budget", int),
        "POROUS_CONE_MAX_GENERATORS": ("cone_max_generators", int),
        "POROUS_ZONOTOPE_BOX_CAP": ("zonotope_box_cap", int),
        "POROUS_BENCH_WORKERS": ("bench_workers", int),
        "POROUS_LOG_LEVEL": ("log_level", str),
        "POROUS_UNICODE": ("unicode_output", bool),
    }

    numeric_limits = {
        "ztarget_state_cap": (1, 10**9),
        "witness_budget": (1, 10**9),
        "bench_witness_budget": (1, 10**9),
        "orbit_check_budget": (1, 10**8),
        "cone_max_generators": (1, 12),
        "zonotope_box_cap": (1, 10**9),
        "bench_workers": (1, 256),
    }

    def __init__(self, config_file: Optional[str] = None, use_dotenv: bool = True):
        """
        Inicializa o carregador

        Args:
            config_file: Caminho para arquivo JSON (padrão: POROUS_CONFIG_FILE ou config/porous_config.json na raiz do projeto)
            use_dotenv: Carregar variáveis de um arquivo .env, se existir
        """
        if use_dotenv:
            load_dotenv()
        self.config_file = config_file or os.getenv("POROUS_CONFIG_FILE", DEFAULT_CONFIG_FILE)
        self.default_config: Dict[str, Any] = {f.name: f.default for f in fields(PorousSettings)}
        self._settings: Optional[PorousSettings] = None

    def load(self, force_reload: bool = False) -> PorousSettings:
        """
        Carrega configurações de arquivo e variáveis de ambiente

        Args:
            force_reload: Ignorar o cache

        Returns:
            Configuração validada
        """
        if self._settings is not None and not force_reload:
            return self._settings

        config = dict(self.default_config)

        file_config = self._load_from_file()
        if file_config:
            config.update(file_config)
            logger.debug(f"Configurações carregadas de: {self.config_file}")

        config.update(self._load_from_env())
        config = self._validate_and_normalize(config)

        self._settings = PorousSettings(**config)
        return self._settings

    def _load_from_file(self) -> Dict[str, Any]:
        """Carrega configurações de arquivo JSON"""
        config_path = Path(self.config_file)
        if not config_path.exists():
            logger.debug(f"Arquivo de configuração não encontrado: {self.config_file}")
            return {}
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(
                "config_file",
                f"JSON inválido: {e}",
                current_value=str(config_path),
                suggestion="Corrija a sintaxe do arquivo ou remova-o para usar os padrões",
            )
        if not isinstance(data, dict):
            raise ConfigurationError("config_file", "o documento deve ser um objeto JSON", current_value=str(config_path))

        unknown = sorted(set(data) - set(self.default_config))
        for key in unknown:
            logger.warning(f"Chave de configuração desconhecida ignorada: {key}")
        return {k: v for k, v in data.items() if k in self.default_config}

    def _load_from_env(self) -> Dict[str, Any]:
        """Carrega configurações de variáveis de ambiente"""
        env_config: Dict[str, Any] = {}
        for env_var, (key, value_type) in self.env_mapping.items():
            value = os.getenv(env_var)
            if value is None:
                continue
            try:
                if value_type is bool:
                    env_config[key] = value.lower() in ("true", "1", "yes", "on")
                else:
                    env_config[key] = value_type(value)
            except ValueError as e:
                logger.warning(f"Erro ao converter {env_var}={value} para {value_type.__name__}: {e}")

        if env_config:
            logger.debug(f"Configurações de variáveis de ambiente: {list(env_config.keys())}")
        return env_config

    def _validate_and_normalize(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Valida e normaliza configurações"""
        validated = dict(config)

        for field_name, (min_val, max_val) in self.numeric_limits.items():
            value = validated.get(field_name)
            if not isinstance(value, int) or isinstance(value, bool) or not min_val <= value <= max_val:
                logger.warning(f"{field_name}={value} fora do limite [{min_val}, {max_val}], usando padrão")
                validated[field_name] = self.default_config[field_name]

        level = str(validated.get("log_level", "INFO")).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            logger.warning(f"log_level={level} inválido, usando padrão")
            level = self.default_config["log_level"]
        validated["log_level"] = level

        validated["unicode_output"] = bool(validated.get("unicode_output", False))
        return validated


# Instância global do carregador
_config_loader: Optional[ConfigLoader] = None


def get_config_loader(config_file: Optional[str] = None) -> ConfigLoader:
    """
    Obtém instância singleton do carregador de configurações

    Args:
        config_file: Arquivo de configuração (apenas na primeira chamada)

    Returns:
        Instância do carregador
    """
    global _config_loader
    if _config_loader is None:
        _config_loader = ConfigLoader(config_file)
    return _config_loader


def get_settings(force_reload: bool = False) -> PorousSettings:
    """Função utilitária para obter a configuração efetiva"""
    return get_config_loader().load(force_reload)


def reset_settings(config_file: Optional[str] = None) -> PorousSettings:
    """Descarta o singleton e recarrega (usado pela CLI com --config e pelos testes)"""
    global _config_loader
    _config_loader = ConfigLoader(config_file)
    return _config_loader.load()
