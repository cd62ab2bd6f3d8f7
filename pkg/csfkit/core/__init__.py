"""Core algorithms"""
