import logging
import os
import sys
from typing import Any, List, Optional

import coloredlogs
import yaml

from catkit.errors import ConfigError

logger = logging.getLogger()

LOG_FORMAT = "%(asctime)s | %(name)s [%(levelname)s] %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
OUTPUT_FORMATS = ("text", "json", "csv")

# Environment variables
CONFIG_ENV = "CATKIT_CONFIG"
MAX_N_ENV = "CATKIT_MAX_N"


class Config:
    """Creates a Config object from a YAML-encoded config file from a given filepath.

    With no filepath, the file named by $CATKIT_CONFIG is read, and if that is not
    set either, every option takes its default value.
    """

    def __init__(self, filepath: Optional[str] = None):
        self.filepath = filepath or os.environ.get(CONFIG_ENV)
        self.config_dict = {}
        if self.filepath:
            if not os.path.isfile(self.filepath):
                raise ConfigError(f"Config file '{self.filepath}' does not exist")

            # Load in the config file at the given filepath
            with open(self.filepath) as file_stream:
                self.config_dict = yaml.safe_load(file_stream.read()) or {}

        # Parse and validate config options
        self._parse_config_values()

    def _parse_config_values(self):
        """Read and validate each config option"""
        # Logging setup
        formatter = logging.Formatter(LOG_FORMAT)

        log_level = str(self._get_cfg(["logging", "level"], default="INFO")).upper()
        if log_level not in LOG_LEVELS:
            raise ConfigError(
                f"logging.level must be one of {', '.join(LOG_LEVELS)}, got {log_level}"
            )
        self.log_level = log_level
        logger.setLevel(log_level)

        file_logging_enabled = self._get_cfg(
            ["logging", "file_logging", "enabled"], default=False
        )
        file_logging_filepath = self._get_cfg(
            ["logging", "file_logging", "filepath"], default="catkit.log"
        )
        if file_logging_enabled:
            handler = logging.FileHandler(file_logging_filepath)
            handler.setFormatter(formatter)
            logger.addHandler(handler)

        console_logging_enabled = self._get_cfg(
            ["logging", "console_logging", "enabled"], default=True
        )
        if console_logging_enabled:
            # stdout carries command output, so logs go to stderr
            coloredlogs.install(
                level=log_level, logger=logger, stream=sys.stderr, fmt=LOG_FORMAT
            )

        # Resource guards
        self.max_n_paths = self._get_int(["guards", "max_n_paths"], default=10)
        self.max_n_permutations = self._get_int(
            ["guards", "max_n_permutations"], default=9
        )
        self.max_n_decks = self._get_int(["guards", "max_n_decks"], default=9)

        env_max_n = os.environ.get(MAX_N_ENV)
        if env_max_n:
            try:
                override = int(env_max_n)
            except ValueError:
                raise ConfigError(
                    f"{MAX_N_ENV} must be an integer, got {env_max_n!r}"
                ) from None
            if override < 0:
                raise ConfigError(f"{MAX_N_ENV} must be nonnegative, got {override}")
            logger.debug("Guards overridden by %s=%d", MAX_N_ENV, override)
            self.max_n_paths = self.max_n_permutations = self.max_n_decks = override

        # Output setup
        self.output_format = self._get_cfg(["output", "format"], default="text")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"output.format must be one of {', '.join(OUTPUT_FORMATS)}, "
                f"got {self.output_format}"
            )

        # Game reporting
        self.report_until = self._get_int(["game", "report_until"], default=60)

    def _get_int(self, path: List[str], default: int) -> int:
        """Get a nonnegative integer option.

        Raises:
            ConfigError: If the option is present but is not a nonnegative integer.
        """
        value = self._get_cfg(path, default=default)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ConfigError(
                f"Config option {'.'.join(path)} must be a nonnegative integer"
            )
        return value

    def _get_cfg(
        self,
        path: List[str],
        default: Optional[Any] = None,
        required: Optional[bool] = True,
    ) -> Any:
        """Get a config option from a path and option name, specifying whether it is
        required.

        Raises:
            ConfigError: If required is True and the object is not found (and there is
                no default value provided), a ConfigError will be raised.
        """
        # Sift through the the config until we reach our option
        config = self.config_dict
        for name in path:
            config = config.get(name) if isinstance(config, dict) else None

            # If at any point we don't get our expected option...
            if config is None:
                # Raise an error if it was required
                if required and default is None:
                    raise ConfigError(f"Config option {'.'.join(path)} is required")

                # or return the default value
                return default

        # We found the option. Return it.
        return config
