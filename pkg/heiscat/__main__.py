#!/usr/bin/env python3
"""
Entry point for python -m heiscat
"""
# Standard libraries
import sys
# Local libraries
import heiscat.startup


sys.exit(heiscat.startup.main())
