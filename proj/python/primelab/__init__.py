# Copyright 2026 The primelab Authors
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

"""Prime tables, gap models, Goldbach counts, zeta and Euler-factor analytics."""

import os
from pathlib import Path

# Installed wheels carry the zero table inside the package.
_bundled = Path(__file__).with_name("data") / "riemann_zeros.txt"
if "PRIMELAB_DATA" not in os.environ and _bundled.is_file():
    os.environ["PRIMELAB_DATA"] = str(_bundled)

from ._primelab import *  # noqa: E402,F401,F403
from ._primelab import __version__  # noqa: E402,F401
