"""Testes para o Logger."""
import logging

from src.utils.logger import Logger


def test_logger_setup():
    """Testa handler único e sem propagação."""
    first = Logger('torux.teste')
    second = Logger('torux.teste')
    assert first.logger is second.logger
    assert len(first.logger.handlers) == 1
    assert not first.logger.propagate


def test_set_level():
    """Testa a troca de nível."""
    logger = Logger('torux.nivel')
    logger.set_level('debug')
    assert logger.logger.level == logging.DEBUG
    logger.set_level('inexistente')
    assert logger.logger.level == logging.INFO


def test_level_from_env(monkeypatch):
    """Testa TORUX_LOG_LEVEL."""
    monkeypatch.setenv('TORUX_LOG_LEVEL', 'warning')
    assert Logger('torux.env').logger.level == logging.WARNING
