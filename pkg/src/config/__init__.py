import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml

from .schema import DragonSettings, validate_settings


PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONFIG_DIR = PROJECT_ROOT / "config"
PROFILE_ENV = "DRAGON_PROFILE"


def _load_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    with path.open("r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle) or {}
    return data


def _deep_merge(base: Dict[str, Any], overlay: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in overlay.items():
        if (
            key in base
            and isinstance(base[key], dict)
            and isinstance(value, dict)
        ):
            base[key] = _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


@lru_cache(maxsize=1)
def load_settings() -> Dict[str, Any]:
    """Load base + profile configuration."""
    base_cfg = _load_yaml(CONFIG_DIR / "base.yaml")
    profile_default = base_cfg.get("profile", {}).get("default")
    profile_name = os.getenv(PROFILE_ENV, profile_default)

    if not profile_name or profile_name == "null":
        raise RuntimeError(
            f"No profile configured. Set {PROFILE_ENV} or pass --profile.\n"
            f"Available profiles: {', '.join(available_profiles()) or 'none'}"
        )

    profile_path = CONFIG_DIR / "profiles" / f"{profile_name}.yaml"
    if not profile_path.exists():
        raise FileNotFoundError(
            f"Profile config not found: {profile_path}\n"
            f"Create {profile_path} or use one of: {', '.join(available_profiles())}"
        )
    profile_cfg = _load_yaml(profile_path)

    merged = _deep_merge(base_cfg.copy(), profile_cfg)

    merged.setdefault("profile", {})
    merged["profile"]["active"] = profile_name
    merged["paths"] = {
        "project_root": str(PROJECT_ROOT),
        "config_dir": str(CONFIG_DIR),
    }
    validate_settings(merged)
    return merged


def reload_settings() -> Dict[str, Any]:
    """Force a reload of configuration (used when switching profiles)."""
    load_settings.cache_clear()
    return load_settings()


def available_profiles():
    return sorted(path.stem for path in (CONFIG_DIR / "profiles").glob("*.yaml"))


__all__ = [
    "CONFIG_DIR",
    "DragonSettings",
    "PROFILE_ENV",
    "PROJECT_ROOT",
    "available_profiles",
    "load_settings",
    "reload_settings",
    "validate_settings",
]
