#
# galoistrans: sound model transformation with Galois connections
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""galoistrans relates system models written in different formalisms.

Properties of a system form a finite complete lattice ordered by specificity.
Each modeling formalism is attached to it by a Galois connection, which is
checked before use. Verified connections allow sound transformation of models
between formalisms, consistency checks across models, and the refinement of
properties by selecting a single model.
"""

import galoistrans.lattice as lattice
import galoistrans.tagopts as tagopts
import galoistrans.galois as galois
import galoistrans.domains as domains

from galoistrans.galois import GaloisConnection
from galoistrans.galois import check_galois
from galoistrans.galois import transform
from galoistrans.lattice import check_lattice_laws

__version__ = "0.1.0"
__all__ = [
    "GaloisConnection",
    "check_galois",
    "check_lattice_laws",
    "transform",
]
__allow_lazy_imports = False
__lazy_imports = {}


def allow_lazy_imports():
    """Enables lazy imports of all submodules and packages of galoistrans.

    If called, references to ``galoistrans.<module_name>`` will be imported
    when first used, without a warning.
    """
    global __allow_lazy_imports
    __allow_lazy_imports = True


def __getattr__(key):
    """Lazy import of galoistrans submodules, e.g. ``galoistrans.scenario``."""
    if not key.startswith("_"):
        import importlib
        import warnings

        if key not in __lazy_imports:
            try:
                __lazy_imports[key] = importlib.import_module(f"{__name__}.{key}")
            except ModuleNotFoundError as e:
                raise AttributeError(
                    f"module 'galoistrans' has no attribute '{key}'.") from e
            if not __allow_lazy_imports:
                warnings.warn(
                    f"Your code triggered a lazy import of {__name__}.{key}. "
                    f"While this will work, it is recommended to add an "
                    f"explicit import statement to your code instead. To "
                    f"disable this warning, run "
                    f"``galoistrans.allow_lazy_imports()``.")
        return __lazy_imports[key]
    raise AttributeError(f"module 'galoistrans' has no attribute '{key}'. "
                         f"Did you import galoistrans.{key}?")
