"""csfkit: chromatic symmetric functions of trees and proper q-caterpillars"""
