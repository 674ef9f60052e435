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
"""A small registry for named constructors.

Several packages in ``galoistrans`` expose a family of interchangeable classes
that scenario files and the command line refer to by name: lattice constructors
in :py:mod:`galoistrans.lattice`, model formalisms in
:py:mod:`galoistrans.domains` and selection strategies in
:py:mod:`galoistrans.galois`.

Calling :py:func:`add_helper_functions` on such a package defines the decorators

* ``register``
* ``parametrize``

and the functions

* ``init`` and
* ``get_options``

inside the package. Call it in the first lines of the package ``__init__.py``,
before importing the submodules that carry the decorators; classes that are never
imported are never registered.
"""

from __future__ import annotations

import fnmatch
import itertools
import sys
import textwrap
import types
import warnings
from typing import Any, Dict, List, Optional, Tuple, Union

_HELPER_NAMES = ("register", "parametrize", "init", "get_options")


class _Registry:
    """Holds one ``name -> (class, pattern)`` table per registry module."""

    _tables: Dict[types.ModuleType, Dict[str, Tuple[type, Optional[str]]]] = {}

    @classmethod
    def table(cls, module: types.ModuleType):
        return cls._tables.setdefault(module, {})

    @classmethod
    def add(cls,
            module: types.ModuleType,
            name: str,
            value: type,
            base: Optional[str] = None,
            override: bool = False,
            deprecated: bool = False):
        if not isinstance(name, str):
            raise ValueError(
                f"Registered names have to be str, got {type(name)}.")
        if not isinstance(value, type):
            raise ValueError(f"Can only register classes, got {type(value)}.")
        table = cls.table(module)
        if name in table:
            if not override:
                raise ValueError(f"Name {name} is already registered for "
                                 f"class {table[name][0]}.")
            del table[name]
        if (value, base) in table.values() and not deprecated:
            raise ValueError(
                f"Class {value} is already registered under another name. "
                f"Register it with deprecated=True to keep an alias.")
        table[name] = (value, base)

    @classmethod
    def init(cls, module: types.ModuleType, name: str, *args, **kwargs):
        table = cls.table(module)
        if name not in table:
            raise ValueError(f"Unknown name {name!r} in {module.__name__}. "
                             f"Registered options: {list(table.keys())}.")
        cls_, _ = table[name]
        return cls_(*args, **kwargs)

    @classmethod
    def options(cls,
                module: types.ModuleType,
                *,
                pattern: Optional[str] = None,
                limit: Optional[int] = None,
                expand_parametrized: bool = True) -> List[str]:
        table = cls.table(module)
        names = []
        seen_patterns = set()
        for name, (_, base) in table.items():
            if not expand_parametrized and base is not None:
                if base in seen_patterns:
                    continue
                seen_patterns.add(base)
            names.append(name)
        if pattern is not None:
            names = fnmatch.filter(names, pattern)
        return names[:limit]


def _get_module(module: Union[types.ModuleType, str]) -> types.ModuleType:
    if isinstance(module, str):
        if module not in sys.modules:
            raise ValueError(f"Invalid module name: Cannot find module "
                             f"{module} in sys.modules")
        return sys.modules[module]
    if isinstance(module, types.ModuleType):
        return module
    raise TypeError(
        f"Invalid type: Expected str or module, but got {type(module)}")


def add_helper_functions(module: Union[types.ModuleType, str]):
    """Turn the given module into a registry.

    * ``register(name)`` is a class decorator adding the class under a unique name.
    * ``parametrize(pattern, **kwargs)`` registers one subclass per combination
      of default constructor arguments, named by formatting ``pattern``.
    * ``init(name, *args, **kwargs)`` instantiates the class registered as ``name``.
    * ``get_options(pattern=None, limit=None)`` lists the registered names.

    Args:
        module: The module to extend, either the module object or its name as
            given by ``__name__``.

    Raises:
        RuntimeError: If the module already defines one of the helper names.
    """

    module = _get_module(module)

    def register(name: str,
                 base: Optional[str] = None,
                 override: bool = False,
                 deprecated: bool = False):
        """Decorator to add a class to the registry under ``name``."""

        def _register(cls):
            _Registry.add(module,
                          name,
                          cls,
                          base=base,
                          override=override,
                          deprecated=deprecated)
            return cls

        return _register

    def parametrize(pattern: str, **all_kwargs):
        """Decorator registering one preset per combination of default arguments.

        Each keyword argument gives the values to iterate over. The presets are
        registered as ``pattern.format(**preset)``.
        """

        def _presets():
            keys = tuple(all_kwargs.keys())
            for values in itertools.product(*(all_kwargs[k] for k in keys)):
                yield dict(zip(keys, values))

        def _create_class(cls, preset: Dict[str, Any]):

            @register(pattern.format(**preset), base=pattern)
            class _Preset(cls):

                def __init__(self, *args, **kwargs):
                    super().__init__(*args, **{**preset, **kwargs})

            _Preset.__name__ = cls.__name__
            _Preset.__qualname__ = cls.__qualname__
            return _Preset

        def _parametrize(cls):
            for preset in _presets():
                _create_class(cls, preset)
            return cls

        return _parametrize

    def init(name: str, *args, **kwargs):
        """Instantiate the class registered as ``name``.

        Args:
            name: The registered name.
            args, kwargs: Passed on to the constructor.

        Returns:
            An instance of the registered class.
        """
        return _Registry.init(module, name, *args, **kwargs)

    def get_options(pattern: Optional[str] = None,
                    limit: Optional[int] = None,
                    expand_parametrized: bool = True) -> List[str]:
        """List registered names, optionally filtered.

        Args:
            pattern: A glob pattern (``*`` and ``?`` wildcards) to filter names.
            limit: Maximum number of names to return, in registration order.
            expand_parametrized: Whether to list every preset created by
                ``parametrize`` or only the first one per pattern.

        Returns:
            The matching names in registration order.
        """
        return _Registry.options(module,
                                 pattern=pattern,
                                 limit=limit,
                                 expand_parametrized=expand_parametrized)

    for name in _HELPER_NAMES:
        if hasattr(module, name):
            raise RuntimeError(
                f"Module {module.__name__} already defines {name}. "
                f"add_helper_functions can only be called once per module, and "
                f"the names {_HELPER_NAMES} must not be defined beforehand.")

    module.register = register
    module.parametrize = parametrize
    module.init = init
    module.get_options = get_options

    if not is_registry(module):
        raise RuntimeError(f"Registry could not be installed in {module}.")


def add_docstring(module: Union[types.ModuleType, str]):
    """Append the list of registered names to a registry module's docstring.

    Args:
        module: The registry module or its name.
    """

    module = _get_module(module)
    if not is_registry(module):
        raise ImportError(
            f"Cannot call {__name__}.add_docstring on {module.__name__}, which "
            f"did not previously call {__name__}.add_helper_functions.")

    options = module.get_options()
    if len(options) < 1:
        warnings.warn(
            f"{module.__name__} does not register any classes. Were the "
            f"submodules carrying the decorators imported?", ImportWarning)

    listing = textwrap.fill(", ".join(options),
                            width=76,
                            subsequent_indent="    ",
                            break_on_hyphens=False)
    docstring = textwrap.dedent(f"""\
    This module is a registry. Registered names:

        {listing}

    Instantiate a registered class with ``{module.__name__}.init(name, ...)``
    and add new ones with ``@{module.__name__}.register("my-name")``.
    """)
    module.__doc__ = "\n\n".join([module.__doc__ or "", docstring])


def is_registry(module: Union[types.ModuleType, str],
                check_docs: bool = False) -> bool:
    """Check whether the module provides all registry helpers.

    Args:
        module: The module or its name.
        check_docs: Additionally require every registered name to appear in
            the module docstring.

    Returns:
        ``True`` if ``register``, ``parametrize``, ``init`` and ``get_options``
        are defined (and, with ``check_docs``, documented).
    """

    module = _get_module(module)
    if not all(hasattr(module, name) for name in _HELPER_NAMES):
        return False
    if check_docs:
        return all(option in (module.__doc__ or "")
                   for option in module.get_options())
    return True
