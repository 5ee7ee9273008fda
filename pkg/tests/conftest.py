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

import os

import pytest

# set before any test module loads settings
os.environ["DRAGON_PROFILE"] = "test"


@pytest.fixture(scope="session", autouse=True)
def set_test_env():
    """Pin the small test profile for the entire test session."""
    from src.config import reload_settings

    os.environ["DRAGON_PROFILE"] = "test"
    reload_settings()
    yield
