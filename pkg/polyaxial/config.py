import logging
import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)


class AppConfig:
    LOG_LEVEL: str = os.getenv("POLYAXIAL_LOG_LEVEL", "INFO")
    LOG_FILE: Optional[str] = os.getenv("POLYAXIAL_LOG_FILE")
    DEFAULT_RADIUS: float = float(os.getenv("POLYAXIAL_DEFAULT_RADIUS", 14.0))
    DEFAULT_NODES: int = int(os.getenv("POLYAXIAL_DEFAULT_NODES", 200))
    THETA_NODES: int = int(os.getenv("POLYAXIAL_THETA_NODES", 64))
    TRUNCATION_TOL: float = float(os.getenv("POLYAXIAL_TRUNCATION_TOL", 1e-12))
    REFINEMENT_TOL: float = float(os.getenv("POLYAXIAL_REFINEMENT_TOL", 0.05))
    MAX_WORKERS: int = int(os.getenv("POLYAXIAL_MAX_WORKERS", 4))
    ORACLE_PATH: str = os.getenv(
        "POLYAXIAL_ORACLE_PATH",
        os.path.join(os.path.dirname(__file__), "data", "oracle_table.json"),
    )


app_conf = AppConfig()


def setup_logging(level: Optional[str] = None) -> None:
    """Configure root logging once for CLI runs."""
    handlers = [logging.StreamHandler()]
    if app_conf.LOG_FILE:
        handlers.append(logging.FileHandler(app_conf.LOG_FILE, mode="a"))
    logging.basicConfig(
        level=getattr(logging, (level or app_conf.LOG_LEVEL).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    logger.debug(f"Logging configured at {level or app_conf.LOG_LEVEL}")
