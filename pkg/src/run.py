"""Ponto de entrada da linha de comando."""
import sys
from pathlib import Path

# Adiciona o diretório raiz ao PYTHONPATH
root_dir = Path(__file__).parent.parent
sys.path.append(str(root_dir))

# Import após adicionar root ao path
from src.controllers.cli_controller import main

if __name__ == "__main__":
    sys.exit(main())
