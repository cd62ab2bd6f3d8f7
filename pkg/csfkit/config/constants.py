"""Application constants"""

# ============================================================================
# 计算上限（桌面规模）
# ============================================================================
MAX_SUBSET_ENUMERATION_ORDER = 20  # csf_power_sum / upoly_naive: 2^(n-1) edge subsets
MAX_COLORING_ORDER = 8  # csf_by_colorings: m^n colorings
MAX_COLORS = 4
MAX_L_POLYNOMIAL_LENGTH = 30
MAX_COMPOSITION_WEIGHT = 24
PRUFER_ENUMERATION_MAX_ORDER = 7  # n^(n-2) labelled trees above this is too many

# Coefficients are checked against signed 64-bit range
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

# Default values
DEFAULT_CACHE_DIR = "./.csf-cache"
DEFAULT_THREADS = 1
DEFAULT_CSF_ORDER_BOUND = 14
DEFAULT_TREE_ORDER_BOUND = 14
DEFAULT_COMPOSITION_ORDER_BOUND = 21
DEFAULT_SAMPLE_SIZE = 50
DEFAULT_RANDOM_SEED = 20240601
DEFAULT_SUBSET_CHUNK_SIZE = 4096

# Defaults for verification sub-commands
DEFAULT_LEMMA3_MAX_ORDER = 16
DEFAULT_EQ3_MAX_ORDER = 10
DEFAULT_PROP1_MAX_ORDER = 13
DEFAULT_UPOLY_MAX_ORDER = 10
DEFAULT_UPOLY_RANDOM_TREES = 200
DEFAULT_UPOLY_RANDOM_MAX_ORDER = 16
DEFAULT_CLASSES_MAX_WEIGHT = 10

# ============================================================================
# 进程退出码
# ============================================================================
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Verification outcomes
STATUS_PASS = "PASS"
STATUS_FAIL = "FAIL"

# Cache layout
CACHE_MANIFEST_FILE = "manifest.json"
CACHE_REPORT_FILE = "report.txt"

# ============================================================================
# 日志消息模板
# ============================================================================
LOG_MSG_APP_STARTING = "csfkit 正在启动: {command}"
LOG_MSG_SERVICES_INIT = "正在初始化服务..."
LOG_MSG_SERVICES_READY = "服务初始化完成"
LOG_MSG_VERIFY_START = "开始验证 {command}: {params}"
LOG_MSG_VERIFY_DONE = "验证完成 {command}: {status}"
LOG_MSG_ORDER_DONE = "q={q} n={order}: {count} 个组合"
LOG_MSG_CACHE_HIT = "缓存命中 {key}"
LOG_MSG_CACHE_WRITE = "写入缓存 {key}"
LOG_MSG_ENUMERATION = "枚举阶数 {order} 的树: {count} 棵"
LOG_MSG_WORKERS = "使用 {workers} 个工作线程处理 {items} 项"

# ============================================================================
# 错误消息
# ============================================================================
ERROR_MSG_INVALID_CONFIG = "配置无效: {detail}"
ERROR_MSG_BOUND_EXCEEDED = "{what} {size} exceeds bound {bound}"
ERROR_MSG_NOT_A_TREE = "edges do not form a tree on {order} vertices: {detail}"
ERROR_MSG_BAD_LABEL = "vertex label {label} out of range 0..{max_label}"
ERROR_MSG_NO_TRUNK = "tree is a path and has no trunk"
ERROR_MSG_EDGE_NOT_IN_TREE = "edge {edge} is not an edge of the tree"
ERROR_MSG_WEIGHT_MISMATCH = "partition {partition} has weight {weight}, expected {order}"
ERROR_MSG_BAD_EXPONENT = "near-concatenation power must be at least 1, got {k}"
ERROR_MSG_IDENTITY_COMPOSITION = "the identity composition (1) has no irreducible factorization"
ERROR_MSG_BAD_COMPOSITION = "composition {composition} is not valid for q={q}: {detail}"
ERROR_MSG_NOT_A_CATERPILLAR = "tree is not a proper {q}-caterpillar: {detail}"
ERROR_MSG_COEFFICIENT_OVERFLOW = "coefficient {value} leaves the signed 64-bit range"
ERROR_MSG_INTERNAL = "内部错误: {detail}"
