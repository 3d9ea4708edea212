"""Interface for application configuration."""

from dataclasses import dataclass, field
from typing import Any, List, Optional

from hydra.core.config_store import ConfigStore
from omegaconf import MISSING


@dataclass
class SessionConfig:
    """Session configuration."""

    max_n: int = 16
    enumeration_limit: int = 20000
    log_level: str = "WARNING"
    _target_: str = "painleve_galois.common.session.Session"


@dataclass
class StepConfig:
    """Base step configuration."""

    session: SessionConfig
    defaults: List[Any] = field(
        default_factory=lambda: [{"session": "base_session"}, "_self_"]
    )


@dataclass
class VorobevYablonskiConfig(StepConfig):
    """Vorobev-Yablonski polynomial step configuration."""

    n: int = MISSING
    _target_: str = "painleve_galois.vorobev_yablonski.VorobevYablonskiStep"


@dataclass
class RationalSolutionConfig(StepConfig):
    """Rational solution step configuration."""

    n: int = MISSING
    verify: bool = False
    _target_: str = "painleve_galois.rational_solution.RationalSolutionStep"


@dataclass
class NormalVariationalConfig(StepConfig):
    """Normal variational equation step configuration."""

    n: int = MISSING
    _target_: str = "painleve_galois.nve.NormalVariationalStep"


@dataclass
class GaloisAnalysisConfig(StepConfig):
    """Galois analysis step configuration.

    Exactly one of `n` and `r` is set.
    """

    n: Optional[int] = None
    r: Optional[str] = None
    format: str = "text"
    _target_: str = "painleve_galois.galois_analysis.GaloisAnalysisStep"


@dataclass
class CertificationConfig(StepConfig):
    """Certification step configuration."""

    from_n: int = MISSING
    to_n: int = MISSING
    out: Optional[str] = None
    parallel: bool = False
    format: str = "text"
    _target_: str = "painleve_galois.certification.CertificationStep"


@dataclass
class Config:
    """Application configuration."""

    # this is unfortunately verbose due to @dataclass limitations
    defaults: List[Any] = field(default_factory=lambda: ["_self_", {"step": MISSING}])
    step: StepConfig = MISSING


def register_config() -> None:
    """Register configuration."""
    cs = ConfigStore.instance()
    cs.store(name="config", node=Config)
    cs.store(group="step/session", name="base_session", node=SessionConfig)
    cs.store(group="step", name="vy", node=VorobevYablonskiConfig)
    cs.store(group="step", name="ratsol", node=RationalSolutionConfig)
    cs.store(group="step", name="nve", node=NormalVariationalConfig)
    cs.store(group="step", name="analyze", node=GaloisAnalysisConfig)
    cs.store(group="step", name="certify", node=CertificationConfig)
