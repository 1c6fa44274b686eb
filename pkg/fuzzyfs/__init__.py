# -*- coding: utf-8 -*-
#
# This file is part of fuzzyfs.
# Copyright (C) 2026 The fuzzyfs developers.
#
# fuzzyfs is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""fuzzyfs."""

from __future__ import absolute_import, print_function

from .version import __version__

__all__ = ("__version__",)
