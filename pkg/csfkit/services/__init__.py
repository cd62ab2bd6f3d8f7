"""Verification and caching services"""
