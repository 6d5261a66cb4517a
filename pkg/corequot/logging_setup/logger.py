import logging
import sys
from logging.handlers import RotatingFileHandler

# Default log settings (can be overridden by config)
DEFAULT_LOG_LEVEL = "WARNING"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
MAX_LOG_FILE_SIZE = 10 * 1024 * 1024  # 10 MB
BACKUP_COUNT = 5


def setup_logging(log_level_str=None, log_file=None, logger_name="corequot"):
    """
    Configures logging for the package.

    Console output goes to stderr; stdout carries command results and JSON.

    Args:
        log_level_str (str, optional): The desired log level (e.g., "DEBUG", "INFO").
                                       Defaults to DEFAULT_LOG_LEVEL.
        log_file (str, optional): Path to a rotating log file. None or "" disables
                                  file logging.
        logger_name (str, optional): The package logger name. Defaults to "corequot".

    Returns:
        logging.Logger: The configured logger instance.
    """
    logger = logging.getLogger(logger_name)

    # Calling setup twice must not duplicate output
    if logger.hasHandlers():
        logger.handlers.clear()

    if log_level_str is None:
        log_level_str = DEFAULT_LOG_LEVEL
    log_level_to_set = getattr(logging, str(log_level_str).upper(), None)
    invalid_level = not isinstance(log_level_to_set, int)
    if invalid_level:
        log_level_to_set = getattr(logging, DEFAULT_LOG_LEVEL)
    logger.setLevel(log_level_to_set)

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if invalid_level:
        logger.warning(f"Invalid log level '{log_level_str}'. Defaulting to {DEFAULT_LOG_LEVEL}.")

    if log_file:
        try:
            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=MAX_LOG_FILE_SIZE,
                backupCount=BACKUP_COUNT,
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
            logger.debug(f"Logging initialized. Log level: {logging.getLevelName(logger.level)}. Outputting to stderr and file: {log_file}")
        except OSError as e:
            logger.error(f"Failed to initialize file logging to {log_file}: {e}")
    else:
        logger.debug(f"Logging initialized. Log level: {logging.getLevelName(logger.level)}. Outputting to stderr only.")

    return logger
