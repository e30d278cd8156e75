#!/usr/bin/env python3
"""
Command line helpers of the heiscat package
"""
