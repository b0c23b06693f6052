# Copyright 2025, seifert-kappa contributors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Resolve the runtime settings from settingsmeta.json, the OVOS configuration,
the command line and the environment."""
import os
from typing import Mapping

from ovos_config import Configuration
from ovos_utils.json_helper import load_commented_json, merge_dict
from ovos_utils.log import LOG

JSON = "json"
CSV = "csv"
TEX = "tex"
PLAIN = "plain"
OUTPUT_FORMATS = (JSON, CSV, TEX, PLAIN)

CONFIG_SECTION = "seifert_kappa"
THREADS_ENV = "SEIFERT_KAPPA_THREADS"
SETTINGS_META = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                             "settingsmeta.json")


def default_settings(path: str = SETTINGS_META) -> dict:
    """Default value of every field declared in settingsmeta.json."""
    try:
        meta = load_commented_json(path)
    except (OSError, ValueError) as e:
        LOG.warning(f"could not read {path}: {e}")
        return {}
    settings = {}
    for section in meta.get("skillMetadata", {}).get("sections", []):
        for fld in section.get("fields", []):
            if "name" in fld and "value" in fld:
                settings[fld["name"]] = fld["value"]
    return settings


class SeifertConfig:
    """Build an object representing the configuration values for a run.

    Later layers win: settingsmeta.json defaults, the "seifert_kappa" section
    of the OVOS configuration, then explicit settings. The thread count may
    still be overridden from the environment.
    """

    def __init__(self, settings: dict = None, environ: Mapping = None,
                 core_config: dict = None):
        self.core_config = Configuration() if core_config is None else core_config
        self.settings = default_settings()
        merge_dict(self.settings, dict(self.core_config.get(CONFIG_SECTION) or {}))
        merge_dict(self.settings, {k: v for k, v in (settings or {}).items() if v is not None})
        self.environ = os.environ if environ is None else environ

    @property
    def threads(self) -> int:
        """Worker threads; the environment wins over settings, "auto" means all cores."""
        value = self.environ.get(THREADS_ENV) or self.settings.get("threads", "auto")
        if str(value).lower() == "auto":
            return os.cpu_count() or 1
        try:
            threads = int(value)
        except ValueError:
            threads = 0
        if threads < 1:
            raise ValueError(f"invalid thread count: {value}")
        return threads

    @property
    def output_format(self) -> str:
        fmt = self.settings.get("output_format", JSON)
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"invalid output format: {fmt}")
        return fmt

    @property
    def digits(self) -> int:
        """Digits of the labeled approximation printed for cyclotomic values"""
        return int(self.settings.get("digits", 50))

    @property
    def check_digits(self) -> int:
        return int(self.settings.get("check_digits", 100))

    @property
    def check_lifts(self) -> bool:
        value = self.settings.get("check_lifts", False)
        if isinstance(value, str):
            return value.lower() in ("true", "1", "yes")
        return bool(value)
