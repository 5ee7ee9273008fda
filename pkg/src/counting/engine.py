# Copyright 2025 Badcompany
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Union

from src.config import load_settings
from src.dualgraph import DualGraph
from src.errors import CounterDisagreement

from .brute import count_brute
from .kasteleyn import count_kasteleyn

logger = logging.getLogger(__name__)


class CounterKind(str, Enum):
    BRUTE = "brute"
    KASTELEYN = "kasteleyn"


@dataclass(frozen=True)
class CountResult:
    value: int
    counter: CounterKind
    cross_checked: bool
    vertices: int


def count_with(g: DualGraph, counter: Union[CounterKind, str]) -> int:
    if CounterKind(counter) is CounterKind.BRUTE:
        return count_brute(g)
    return count_kasteleyn(g)


def count(
    g: DualGraph,
    counter: Optional[Union[CounterKind, str]] = None,
    cross_check_max_vertices: Optional[int] = None,
    settings: Optional[Dict[str, Any]] = None,
) -> CountResult:
    """
    Count perfect matchings with the configured counter.

    Kasteleyn results on graphs with at most `cross_check_max_vertices`
    vertices are compared against the brute-force counter.
    """
    if counter is None or cross_check_max_vertices is None:
        settings = settings or load_settings()
        counting_cfg = settings.get("counting", {})
        if counter is None:
            counter = counting_cfg.get("counter", CounterKind.KASTELEYN.value)
        if cross_check_max_vertices is None:
            cross_check_max_vertices = int(counting_cfg.get("cross_check_max_vertices", 40))

    kind = CounterKind(counter)
    value = count_with(g, kind)
    cross_checked = False
    if kind is CounterKind.KASTELEYN and len(g) <= cross_check_max_vertices:
        oracle = count_brute(g)
        cross_checked = True
        if oracle != value:
            logger.error(f"Counter disagreement on {len(g)} vertices: kasteleyn={value} brute={oracle}")
            raise CounterDisagreement(value, oracle, f"{len(g)} vertices")
    logger.debug(f"Counted {value} matchings on {len(g)} vertices with {kind.value}")
    return CountResult(value, kind, cross_checked, len(g))
