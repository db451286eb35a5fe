# Utility functions for logging setup and text reports

import logging
import os

from config.settings import LOG_FILE, LOG_FORMAT, LOG_LEVEL, TABLE_WIDTH


def setup_logging(level=None, log_file=LOG_FILE):
    """Configure root logging from the settings constants."""
    handlers = [logging.StreamHandler()]
    if log_file:
        os.makedirs(os.path.dirname(log_file), exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=(level or LOG_LEVEL).upper(), format=LOG_FORMAT,
                        handlers=handlers, force=True)


def status_mark(ok):
    return "✅" if ok else "❌"


def format_table(title, rows, width=TABLE_WIDTH):
    """Render (label, value) rows under a ruled title."""
    lines = [f"\n{title}", "=" * width]
    label_width = max((len(str(label)) for label, _ in rows), default=0)
    for label, value in rows:
        lines.append(f"{str(label):<{label_width}}  {value}")
    lines.append("=" * width)
    return "\n".join(lines)


def format_frame(title, frame, width=TABLE_WIDTH):
    """Render a pandas DataFrame under a ruled title."""
    return "\n".join([f"\n{title}", "=" * width, frame.to_string(), "=" * width])
