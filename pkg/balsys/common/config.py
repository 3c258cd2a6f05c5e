# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Parses balsys config files."""

import logging
import os

from configobj import ConfigObj, ConfigObjError

from .errors import ConfigError
from .validate import cfg, get_validator

logger = logging.getLogger(__name__)

DEFAULT_FILENAME = ".balsysrc"
CONFIG_FILENAMES = [DEFAULT_FILENAME, "balsys.rc"]
HOME = os.path.expanduser("~")
CONFIG_PATH = [HOME]
FN_CONFIG = os.path.expanduser("~/.balsysrc")


def _search_local(root):
    for fn in CONFIG_FILENAMES:
        fn_ = os.path.abspath(os.path.join(root, fn))
        if os.path.isfile(fn_):
            yield fn_


def search_tree(root=None):
    """Locates balsys configuration files in a directory hierarchy.

    Parameters
    ----------
    root : str
        Path to search. Uses ``os.getcwd()`` if None (Default value = None).

    """
    if root is None:
        root = os.getcwd()
    while True:
        yield from _search_local(root)
        up = os.path.abspath(os.path.join(root, ".."))
        if up == root:
            logger.debug("Reached filesystem root.")
            return
        root = up


def search_standard_dirs():
    """Locates balsys configuration files in standard directories."""
    for path in CONFIG_PATH:
        yield from _search_local(path)


def read_config_file(filename):
    """Read a configuration file.

    Raises
    ------
    ConfigError
        If the file cannot be read or parsed.

    """
    logger.debug(f"Reading config file '{filename}'.")
    try:
        config = Config(filename, configspec=cfg.split("\n"))
    except (OSError, ConfigObjError) as error:
        raise ConfigError(f"Failed to read configuration file '{filename}':\n{error}")
    # Verification fills in defaults, which must not reach merge().
    verification = Config(config.dict(), configspec=cfg.split("\n")).verify()
    if verification is not True:
        logger.debug(f"Config file '{os.path.abspath(filename)}' may contain invalid values.")
    return config


def get_config(infile=None, configspec=None, *args, **kwargs):
    """Get configuration from a file."""
    if configspec is None:
        configspec = cfg.split("\n")
    return Config(infile, configspec=configspec, *args, **kwargs)


def load_config(root=None, local=False):
    """Load configuration, searching upward from a root path.

    Files found closer to ``root`` take precedence. With ``local`` only
    ``root`` itself is searched. The result is verified, so unset keys carry
    their defaults.

    Raises
    ------
    ConfigError
        If a file cannot be read or a value is invalid.

    """
    if root is None:
        root = os.getcwd()
    config = Config(configspec=cfg.split("\n"))
    if local:
        found = list(_search_local(root))
    else:
        found = list(search_standard_dirs())
        found.extend(fn for fn in reversed(list(search_tree(root))) if fn not in found)
    for fn in found:
        config.merge(read_config_file(fn))
    result = config.verify()
    if result is not True:
        raise ConfigError(f"Invalid configuration values: {invalid_keys(result)}.")
    return config


def invalid_keys(result, prefix=""):
    """Return the dotted keys that failed validation in a ``verify()`` result."""
    if result is False:
        return [prefix.rstrip(".") or "<all>"]
    keys = []
    for key, value in result.items():
        if value is True:
            continue
        if isinstance(value, dict):
            keys.extend(invalid_keys(value, f"{prefix}{key}."))
        else:
            keys.append(f"{prefix}{key}")
    return keys


class Config(ConfigObj):
    """Manages configuration for balsys."""

    encoding = "utf-8"

    def verify(self, validator=None, *args, **kwargs):
        """Validate the contents of this configuration."""
        if validator is None:
            validator = get_validator()
        return super().validate(validator, *args, **kwargs)

    def search_options(self):
        """Return the ``[search]`` section as a plain dict."""
        return dict(self.get("search", {}))


__all__ = [
    "Config",
    "get_config",
    "invalid_keys",
    "load_config",
    "read_config_file",
    "search_standard_dirs",
    "search_tree",
]
