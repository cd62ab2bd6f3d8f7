"""服务容器模块

管理报告缓存与验证服务的生命周期。
"""

import logging
from typing import Optional

from csfkit.config.settings import Config
from csfkit.config.constants import (
    LOG_MSG_SERVICES_INIT,
    LOG_MSG_SERVICES_READY,
)
from csfkit.services.report_cache import FileReportCache, ReportCacheProtocol
from csfkit.services.verification_service import VerificationService


class ServiceContainer:
    """服务容器，管理应用程序服务的生命周期

    Attributes:
        config: 应用配置对象
        _cache: 报告缓存实例
        _verification_service: 验证服务实例
        _logger: 日志记录器
        _initialized: 初始化状态标志
    """

    def __init__(self, config: Config, cache: Optional[ReportCacheProtocol] = None):
        """初始化服务容器

        Args:
            config: 应用配置对象
            cache: 可选的报告缓存；缺省时使用 config.CACHE_DIR 下的文件缓存
        """
        self.config = config
        self._provided_cache = cache
        self._cache: Optional[ReportCacheProtocol] = None
        self._verification_service: Optional[VerificationService] = None
        self._logger = logging.getLogger(__name__)
        self._initialized = False

    def initialize(self) -> None:
        """初始化所有服务

        Raises:
            RuntimeError: 如果初始化失败
        """
        if self._initialized:
            self._logger.warning("服务容器已经初始化，跳过重复初始化")
            return

        self._logger.info(LOG_MSG_SERVICES_INIT)

        try:
            self._cache = self._provided_cache or FileReportCache(self.config.CACHE_DIR)
            self._logger.debug(f"报告缓存: {self._cache.__class__.__name__}")

            self._verification_service = VerificationService(
                config=self.config,
                cache=self._cache
            )

            self._initialized = True
            self._logger.info(LOG_MSG_SERVICES_READY)

        except Exception as e:
            self._logger.error(f"服务初始化失败: {e}", exc_info=True)
            self._initialized = True
            self.cleanup()
            raise RuntimeError(f"服务容器初始化失败: {e}") from e

    def cleanup(self) -> None:
        """清理所有服务资源（幂等）"""
        if not self._initialized:
            self._logger.debug("服务容器未初始化，无需清理")
            return

        self._verification_service = None
        self._cache = None
        self._initialized = False
        self._logger.debug("服务资源清理完成")

    @property
    def is_initialized(self) -> bool:
        return self._initialized

    @property
    def cache(self) -> ReportCacheProtocol:
        """获取报告缓存实例

        Raises:
            RuntimeError: 如果服务容器未初始化
        """
        if not self._initialized or self._cache is None:
            raise RuntimeError("服务容器未初始化，请先调用 initialize()")
        return self._cache

    @property
    def verification_service(self) -> VerificationService:
        """获取验证服务实例

        Raises:
            RuntimeError: 如果服务容器未初始化
        """
        if not self._initialized or self._verification_service is None:
            raise RuntimeError("服务容器未初始化，请先调用 initialize()")
        return self._verification_service
