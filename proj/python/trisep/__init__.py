# Copyright 2026 The trisep Authors
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

"""Witness-triple faces of three-qubit separable states."""

import json as _json

from ._trisep import *  # noqa: F401,F403
from ._trisep import __version__, verify_all_json


def verify_all(u, seed=42):
    """Runs every certification check at u and returns the report as a dict."""
    return _json.loads(verify_all_json(u, seed))
