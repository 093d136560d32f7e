import logging

from ..errors import ConfigError

# Per-particle diagnostics go below DEBUG.
TRACE_LEVEL = logging.DEBUG - 5

def add_level(level_name, level_num):
    """
    Registers a named logging level and a matching logger method, e.g.
    `logger.trace(...)`. Registering the same name again is a no-op.
    """
    if hasattr(logging, level_name):
        return getattr(logging, level_name)

    def log_for_level(self, message, *args, **kwargs):
        if self.isEnabledFor(level_num):
            self._log(level_num, message, args, **kwargs)

    logging.addLevelName(level_num, level_name)
    setattr(logging, level_name, level_num)
    setattr(logging.getLoggerClass(), level_name.lower(), log_for_level)
    return level_num

def parse_level(name):
    """
    Converts a level name such as `info` or `trace` to its number.
    """
    level = logging.getLevelName(str(name).upper())
    if not isinstance(level, int):
        raise ConfigError('Unknown logging level `{}`.'.format(name))
    return level

add_level('TRACE', TRACE_LEVEL)
