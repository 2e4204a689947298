"""Testes do torux (caminhos configurados em conftest.py)."""
