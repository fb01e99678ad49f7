# 退出码（成功为 0）
EXIT_FAILURE = 1   # 检查/定律/均衡等语义失败
EXIT_USAGE = 2     # 参数错误、I/O错误

# 日志
DEFAULT_LOG_LEVEL = "WARNING"
VERBOSE_LOG_LEVEL = "DEBUG"

# 渲染
DOT_GRAPH_NAME = "pregame"
DOT_RANKDIR = "TB"
