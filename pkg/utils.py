# Utility functions for gkgrowth
import os
import sys
import json
from config import SETTINGS_FILE, DEFAULT_SETTINGS
from errors import ProblemParseError
from logging_config import log_error, log_debug


def get_app_dir():
    """Directory holding the program (or the frozen executable)"""
    if getattr(sys, 'frozen', False):
        return os.path.dirname(sys.executable)
    return os.path.dirname(os.path.abspath(__file__))


def get_settings_path():
    return os.path.join(get_app_dir(), SETTINGS_FILE)


def load_settings(path=None):
    """
    Load user settings, falling back to defaults for missing keys.

    Args:
        path: Settings file; defaults to gkgrowth_config.txt next to the program

    Returns:
        Dictionary with every key of DEFAULT_SETTINGS
    """
    settings = dict(DEFAULT_SETTINGS)
    config_path = path or get_settings_path()
    try:
        if os.path.exists(config_path):
            with open(config_path, 'r', encoding='utf-8') as f:
                stored = json.loads(f.read().strip() or "{}")
            if isinstance(stored, dict):
                settings.update({k: v for k, v in stored.items() if k in DEFAULT_SETTINGS})
            log_debug(f"settings loaded from {config_path}")
    except Exception as e:
        log_error(f"Error loading settings from {config_path}: {e}")
    return settings


def save_settings(settings, path=None):
    """Save settings as JSON; returns True on success"""
    config_path = path or get_settings_path()
    try:
        with open(config_path, 'w', encoding='utf-8') as f:
            json.dump({k: settings[k] for k in DEFAULT_SETTINGS if k in settings}, f, indent=2)
        return True
    except Exception as e:
        log_error(f"Error saving settings to {config_path}: {e}")
        return False


def read_json_file(path):
    """
    Read a JSON document.

    Raises:
        ProblemParseError: file missing, unreadable or not valid JSON
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise ProblemParseError(f"problem file {path} not found") from e
    except (OSError, json.JSONDecodeError) as e:
        raise ProblemParseError(f"cannot read {path}: {e}") from e


def parse_int_list(text):
    """"2,3" -> [2, 3]; used for comma separated CLI options"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ProblemParseError(f"expected comma separated integers, got {text!r}") from e
