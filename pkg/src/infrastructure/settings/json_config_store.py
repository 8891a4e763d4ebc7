"""JSON config store implementation."""
import json
import logging
from dataclasses import asdict, fields
from pathlib import Path
from ...application.ports.config_store import ConfigStore
from ...domain.entities.run_config import RunConfig
from ...domain.errors.exceptions import InvalidConfigError

logger = logging.getLogger(__name__)


class JsonConfigStore(ConfigStore):
    """Config store using a JSON file."""
    
    def __init__(self, config_path: Path | None = None):
        """
        Initialize JSON config store.
        
        Args:
            config_path: Path to config file. If None, uses default location.
        """
        if config_path is None:
            # Default: ~/.config/jetvar/config.json
            config_dir = Path.home() / '.config' / 'jetvar'
            config_path = config_dir / 'config.json'
        
        self.config_path = Path(config_path)
    
    def load(self) -> RunConfig:
        """Load configuration from JSON file."""
        if not self.config_path.exists():
            logger.info(f"No config at {self.config_path}, using defaults")
            return RunConfig.default()
        
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise InvalidConfigError(f"Cannot read config {self.config_path}: {e}") from e
        
        if not isinstance(data, dict):
            raise InvalidConfigError(f"Config {self.config_path} must hold a JSON object")
        
        known = {f.name for f in fields(RunConfig)}
        unknown = sorted(set(data) - known)
        if unknown:
            logger.warning(f"Ignoring unknown config keys: {', '.join(unknown)}")
        
        try:
            return RunConfig(**{k: v for k, v in data.items() if k in known})
        except (TypeError, ValueError) as e:
            raise InvalidConfigError(f"Invalid config {self.config_path}: {e}") from e
    
    def save(self, config: RunConfig) -> None:
        """Save configuration to JSON file."""
        # Ensure directory exists
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        
        with open(self.config_path, 'w', encoding='utf-8') as f:
            json.dump(asdict(config), f, indent=2)
        
        logger.info(f"Saved config to {self.config_path}")
