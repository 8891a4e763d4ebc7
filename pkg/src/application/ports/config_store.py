"""Config store port."""
from abc import ABC, abstractmethod
from ...domain.entities.run_config import RunConfig


class ConfigStore(ABC):
    """Port for run configuration persistence."""
    
    @abstractmethod
    def load(self) -> RunConfig:
        """
        Load configuration from storage.
        
        Returns:
            RunConfig, or the default if none is stored
            
        Raises:
            InvalidConfigError: If the stored configuration is malformed
        """
        pass
    
    @abstractmethod
    def save(self, config: RunConfig) -> None:
        """
        Save configuration to storage.
        
        Args:
            config: Configuration to save
            
        Raises:
            IOError: If save fails
        """
        pass
