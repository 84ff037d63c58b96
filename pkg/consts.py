#!/usr/bin/env python3
# www.jrodal.com

import os

from rich.console import Console

SCHEMA = "lme-forge/1"

# override these through the environment for bigger runs
DEFAULT_CAP_DIMS = int(os.environ.get("LME_FORGE_CAP_DIMS", 20_000))
DEFAULT_CAP_DIAGRAMS = int(os.environ.get("LME_FORGE_CAP_DIAGRAMS", 1_000_000))
DEFAULT_CAP_SEQUENCE = int(os.environ.get("LME_FORGE_CAP_SEQUENCE", 64))
DEFAULT_JOBS = int(os.environ.get("LME_FORGE_JOBS", min(8, os.cpu_count() or 1)))

CONSOLE = Console()
ERR_CONSOLE = Console(stderr=True)
