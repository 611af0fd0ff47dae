"""Process-wide "app" logger.

Environment:
    VERBOSE          "true"/"1"/"yes" (default) enables logging, anything else disables it
    HARDY_LOG_LEVEL  console level, default INFO
    HARDY_LOG_DIR    directory of the daily DEBUG file, default "logs"; empty disables the file
"""

import inspect
import logging
import os
from datetime import datetime
from pathlib import Path

FORMAT = "%(asctime)s | %(levelname)s | %(module_name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ModuleAwareLogger(logging.Logger):
    """Logger that stamps every record with the calling module's `__name__` as `module_name`."""

    def _log(self, level, msg, args, exc_info=None, extra=None, stack_info=False, stacklevel=1):
        # _log <- debug/info/... <- caller
        frame = inspect.currentframe()
        try:
            caller = frame.f_back.f_back if frame and frame.f_back and frame.f_back.f_back else frame
            module_name = caller.f_globals.get("__name__", "unknown") if caller else "unknown"
        finally:
            del frame
        extra = {**(extra or {}), "module_name": module_name}
        super()._log(level, msg, args, exc_info, extra, stack_info, stacklevel)


def _enabled() -> bool:
    return os.environ.get("VERBOSE", "true").lower() in ("true", "1", "yes")


def _console_handler(formatter: logging.Formatter) -> logging.Handler:
    # stdout is reserved for reports
    handler = logging.StreamHandler()
    handler.setLevel(os.environ.get("HARDY_LOG_LEVEL", "INFO").upper())
    handler.setFormatter(formatter)
    return handler


def _file_handler(formatter: logging.Formatter, log_dir: Path) -> logging.Handler:
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / datetime.now().strftime("%Y-%m-%d.log")
    with open(log_file, "a", encoding="utf-8") as stream:
        if stream.tell():
            stream.write("\n")
        rule = "=" * 80
        stream.write(f"{rule}\n[{datetime.now().strftime(DATE_FORMAT)}] hardy session\n{rule}\n")
    handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(formatter)
    return handler


def _create_logger() -> logging.Logger:
    logging.setLoggerClass(ModuleAwareLogger)
    logger = logging.getLogger("app")
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    if not _enabled():
        logger.disabled = True
        return logger

    logger.handlers.clear()
    formatter = logging.Formatter(FORMAT, datefmt=DATE_FORMAT)
    logger.addHandler(_console_handler(formatter))
    log_dir = os.environ.get("HARDY_LOG_DIR", "logs")
    if log_dir:
        logger.addHandler(_file_handler(formatter, Path(log_dir)))
    return logger


logger = _create_logger()
