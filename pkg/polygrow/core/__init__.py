"""Geometry, canonical forms, growing and Ehrhart theory"""
