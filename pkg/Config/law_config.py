# 定律测试默认参数
DEFAULT_SEED = 7
DEFAULT_ITERATIONS = 100

# 随机前博弈生成器
MAX_SET_SIZE = 3        # 端口集合最多3个元素
MAX_PORTS = 2           # 端口列表最大长度
MAX_DEPTH = 3           # 组合深度
MAX_PROFILES = 16       # 单个原子的策略数上限
RESAMPLE_BUDGET = 50    # 超出上限时的重采样次数

# 验收规模
SIMULTANEOUS_BATTERY = 500
SEQUENTIAL_BATTERY = 200

# 随机定律检查的外延比较规模上限 |Σ|·|X|·(|R^Y|+|R|)，超过即重采样
LAW_COST_CAP = 512
