"""Pipeline configuration: flat key=value files over shipped defaults.

Every knob has a default pointing at the data files packaged with the
library, so an empty config is a valid config. validate() checks value
ranges and that every referenced file exists before a run starts. The
echo() form is written into the run summary; feeding it back as a
config file reproduces the run.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from importlib.resources import files
from pathlib import Path

from .errors import MalformedConfig

_DATA = files("citecode").joinpath("data")


def _data_path(name: str) -> Path:
    return Path(str(_DATA.joinpath(name)))


@dataclass
class PipelineConfig:
    window_before: int = 1
    window_after: int = 1
    delta: float = 0.2
    lexicon_negative: Path = field(default_factory=lambda: _data_path("lexicon_negative.csv"))
    lexicon_positive: Path = field(default_factory=lambda: _data_path("lexicon_positive.csv"))
    lexicon_evidence: Path = field(default_factory=lambda: _data_path("lexicon_evidence.csv"))
    lexicon_framework: Path = field(default_factory=lambda: _data_path("lexicon_framework.csv"))
    lexicon_focus: Path = field(default_factory=lambda: _data_path("lexicon_focus.csv"))
    venue_map: Path = field(default_factory=lambda: _data_path("venue_domains.csv"))
    abbreviations: Path = field(default_factory=lambda: _data_path("abbreviations.txt"))
    output_dir: Path = Path("out")

    _INT_KEYS = ("window_before", "window_after")
    _FLOAT_KEYS = ("delta",)
    _PATH_KEYS = (
        "lexicon_negative", "lexicon_positive", "lexicon_evidence",
        "lexicon_framework", "lexicon_focus", "venue_map", "abbreviations",
        "output_dir",
    )

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        """Parse key=value lines; # comments and blank lines skipped.

        Relative paths are resolved against the config file's directory.
        """
        path = Path(path)
        base = path.parent
        config = cls()
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise MalformedConfig(f"cannot read config {path}: {exc}") from None
        for line_no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise MalformedConfig(f"{path.name}: expected key=value", line=line_no)
            key, _, value = stripped.partition("=")
            key = key.strip()
            value = value.strip()
            if key in cls._INT_KEYS:
                try:
                    setattr(config, key, int(value))
                except ValueError:
                    raise MalformedConfig(
                        f"{path.name}: {key} must be an integer", line=line_no
                    ) from None
            elif key in cls._FLOAT_KEYS:
                try:
                    setattr(config, key, float(value))
                except ValueError:
                    raise MalformedConfig(
                        f"{path.name}: {key} must be a number", line=line_no
                    ) from None
            elif key in cls._PATH_KEYS:
                candidate = Path(value)
                if not candidate.is_absolute():
                    candidate = (base / candidate).resolve()
                setattr(config, key, candidate)
            else:
                raise MalformedConfig(f"{path.name}: unknown key {key!r}", line=line_no)
        config.validate()
        return config

    def validate(self) -> None:
        if not (0 <= self.window_before <= 5 and 0 <= self.window_after <= 5):
            raise MalformedConfig(
                f"window sizes must be in 0..5: ({self.window_before}, {self.window_after})"
            )
        if not (0.0 <= self.delta <= 1.0):
            raise MalformedConfig(f"delta must be in 0..1: {self.delta}")
        for key in self._PATH_KEYS:
            if key == "output_dir":
                continue
            target = Path(getattr(self, key))
            if not target.is_file():
                raise MalformedConfig(f"{key} file not found: {target}")

    def echo(self) -> dict[str, str]:
        """Effective configuration as writable key=value pairs."""
        pairs = {}
        for f in fields(self):
            value = getattr(self, f.name)
            pairs[f.name] = str(value)
        return pairs
