"""Configuration management using Pydantic Settings"""

from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Uses Pydantic BaseSettings to read from a .env file or the process environment.
    Every field can be overridden with an ``NMTAB_`` prefixed variable
    (e.g. ``NMTAB_STAGE_BUDGET=2000``). Library entry points take these values as
    defaults only; explicit arguments always win.
    """

    # Application Metadata
    app_name: str = "nmatrix-tableaux"
    app_version: str = "0.1.0"
    debug: bool = False  # Console rendering and DEBUG level if True
    verbose: bool = False  # INFO level if True

    # Proof search
    default_logic: str = Field(default="tm", description="Logic used when --logic is omitted")
    stage_budget: int = Field(default=500, ge=1, description="Systematic tableau stage budget")

    # Semantic checks
    oracle_node_cap: int = Field(
        default=24, ge=1, description="Largest subformula DAG the propositional oracle accepts"
    )
    max_domain: int = Field(default=2, ge=1, description="Largest domain for bounded validity")
    structure_cap: int = Field(
        default=250_000, ge=1, description="Largest number of structures bounded validity visits"
    )

    # Fuzzing
    fuzz_seed: int = Field(default=20151, description="Seed for the random formula corpus")
    fuzz_count: int = Field(default=1000, ge=1, description="Random formulas per fuzz run")
    fuzz_max_size: int = Field(default=10, ge=1, description="Node bound for random formulas")
    fuzz_atoms: int = Field(default=2, ge=1, le=26, description="Atoms available to the generator")
    fuzz_workers: int = Field(default=1, ge=1, description="Worker processes for fuzzing")

    # Hilbert systems
    axioms_file: Optional[str] = Field(
        default=None, description="Axiom catalogue path (defaults to config/axioms.yaml)"
    )

    model_config = SettingsConfigDict(
        env_prefix="NMTAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def resolved_axioms_file(self) -> Path:
        """Return the axiom catalogue location."""
        if self.axioms_file:
            return Path(self.axioms_file)
        return PROJECT_ROOT / "config" / "axioms.yaml"


# Global settings instance
settings = Settings()
