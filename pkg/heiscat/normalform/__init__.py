#!/usr/bin/env python3
"""
Normal forms of morphisms in Heis_k
"""
