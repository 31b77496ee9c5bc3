from phasentropy.cli.commands import (
    cmd_compute,
    cmd_figures,
    cmd_oracle,
    cmd_scan,
    cmd_schur,
)
from phasentropy.cli.main import main

__all__ = [
    "cmd_compute",
    "cmd_figures",
    "cmd_oracle",
    "cmd_scan",
    "cmd_schur",
    "main",
]
