"""Application configuration settings"""
import os
import logging
from typing import Optional

from csfkit.config.constants import (
    DEFAULT_CACHE_DIR,
    DEFAULT_THREADS,
    DEFAULT_CSF_ORDER_BOUND,
    DEFAULT_TREE_ORDER_BOUND,
    DEFAULT_COMPOSITION_ORDER_BOUND,
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_RANDOM_SEED,
    MAX_SUBSET_ENUMERATION_ORDER,
    MAX_COMPOSITION_WEIGHT,
)

VALID_LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


class ConfigurationError(Exception):
    """配置错误异常"""
    pass


class Config:
    """Application configuration loaded from environment variables"""

    def __init__(self):
        """初始化并验证配置"""
        self._logger: Optional[logging.Logger] = None
        self._load_and_validate()

    def _get_logger(self) -> logging.Logger:
        """获取日志记录器（延迟初始化）"""
        if self._logger is None:
            self._logger = logging.getLogger(__name__)
        return self._logger

    def _load_and_validate(self) -> None:
        """加载并验证所有配置"""
        self.DEBUG = os.getenv('DEBUG', 'False') == 'True'

        # Result cache
        self.CACHE_DIR = os.getenv('CSF_CACHE_DIR', DEFAULT_CACHE_DIR)
        if not self.CACHE_DIR.strip():
            raise ConfigurationError("CSF_CACHE_DIR 不能为空")

        # Worker pool
        self.THREADS = self._validate_positive_int(
            os.getenv('CSF_THREADS', str(DEFAULT_THREADS)),
            'CSF_THREADS'
        )

        # Desk-scale bounds
        self.CSF_ORDER_BOUND = self._validate_bounded_int(
            os.getenv('CSF_ORDER_BOUND', str(DEFAULT_CSF_ORDER_BOUND)),
            'CSF_ORDER_BOUND',
            MAX_SUBSET_ENUMERATION_ORDER
        )
        self.TREE_ORDER_BOUND = self._validate_positive_int(
            os.getenv('CSF_TREE_ORDER_BOUND', str(DEFAULT_TREE_ORDER_BOUND)),
            'CSF_TREE_ORDER_BOUND'
        )
        self.COMPOSITION_ORDER_BOUND = self._validate_bounded_int(
            os.getenv('CSF_COMPOSITION_ORDER_BOUND', str(DEFAULT_COMPOSITION_ORDER_BOUND)),
            'CSF_COMPOSITION_ORDER_BOUND',
            MAX_COMPOSITION_WEIGHT
        )

        # Random sampling in verification runs
        self.SAMPLE_SIZE = self._validate_positive_int(
            os.getenv('CSF_SAMPLE_SIZE', str(DEFAULT_SAMPLE_SIZE)),
            'CSF_SAMPLE_SIZE'
        )
        self.RANDOM_SEED = self._validate_non_negative_int(
            os.getenv('CSF_RANDOM_SEED', str(DEFAULT_RANDOM_SEED)),
            'CSF_RANDOM_SEED'
        )

        # Logging
        self.LOG_LEVEL = self._validate_log_level(os.getenv('LOG_LEVEL', 'INFO'))
        self.LOG_FILE = os.getenv('CSF_LOG_FILE') or None

        self._log_configuration()

    def apply_overrides(self, **overrides) -> None:
        """
        用命令行参数覆盖配置，值为 None 的项保持不变

        Args:
            **overrides: 属性名到新值的映射（例如 THREADS=4）

        Raises:
            ConfigurationError: 未知配置项或值无效
        """
        for name, value in overrides.items():
            if value is None:
                continue
            if not hasattr(self, name):
                raise ConfigurationError(f"未知配置项: {name}")
            if name == 'LOG_LEVEL':
                value = self._validate_log_level(str(value))
            elif name == 'CSF_ORDER_BOUND':
                value = self._validate_bounded_int(str(value), name, MAX_SUBSET_ENUMERATION_ORDER)
            elif name == 'COMPOSITION_ORDER_BOUND':
                value = self._validate_bounded_int(str(value), name, MAX_COMPOSITION_WEIGHT)
            elif name in ('THREADS', 'TREE_ORDER_BOUND', 'SAMPLE_SIZE'):
                value = self._validate_positive_int(str(value), name)
            setattr(self, name, value)

    def _validate_log_level(self, level: str) -> str:
        level = level.upper()
        if level not in VALID_LOG_LEVELS:
            raise ConfigurationError(f"无效的日志级别: {level}")
        return level

    def _validate_positive_int(self, value_str: str, name: str) -> int:
        """
        验证正整数配置

        Args:
            value_str: 配置值字符串
            name: 配置名称

        Returns:
            验证后的正整数

        Raises:
            ConfigurationError: 配置值无效
        """
        try:
            value = int(value_str)
        except ValueError:
            raise ConfigurationError(f"{name} 必须是整数: {value_str}")

        if value <= 0:
            raise ConfigurationError(f"{name} 必须是正整数: {value}")

        return value

    def _validate_non_negative_int(self, value_str: str, name: str) -> int:
        """验证非负整数配置（例如随机种子）"""
        try:
            value = int(value_str)
        except ValueError:
            raise ConfigurationError(f"{name} 必须是整数: {value_str}")

        if value < 0:
            raise ConfigurationError(f"{name} 不能为负数: {value}")

        return value

    def _validate_bounded_int(self, value_str: str, name: str, upper: int) -> int:
        """
        验证带硬上限的正整数配置

        Args:
            value_str: 配置值字符串
            name: 配置名称
            upper: 允许的最大值

        Returns:
            验证后的整数

        Raises:
            ConfigurationError: 配置值无效或超过上限
        """
        value = self._validate_positive_int(value_str, name)
        if value > upper:
            raise ConfigurationError(f"{name} 不能超过 {upper}: {value}")
        return value

    def _log_configuration(self) -> None:
        """记录配置值"""
        logger = self._get_logger()

        # 只在 DEBUG 级别记录配置
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("=== 应用配置 ===")
            logger.debug(f"DEBUG: {self.DEBUG}")
            logger.debug(f"CACHE_DIR: {self.CACHE_DIR}")
            logger.debug(f"THREADS: {self.THREADS}")
            logger.debug(f"CSF_ORDER_BOUND: {self.CSF_ORDER_BOUND}")
            logger.debug(f"TREE_ORDER_BOUND: {self.TREE_ORDER_BOUND}")
            logger.debug(f"COMPOSITION_ORDER_BOUND: {self.COMPOSITION_ORDER_BOUND}")
            logger.debug(f"SAMPLE_SIZE: {self.SAMPLE_SIZE}")
            logger.debug(f"RANDOM_SEED: {self.RANDOM_SEED}")
            logger.debug(f"LOG_LEVEL: {self.LOG_LEVEL}")
            logger.debug(f"LOG_FILE: {self.LOG_FILE}")
            logger.debug("===================")
