import hashlib


def stable_bucket(key: str, buckets: int) -> int:
    """哈希分桶：key→桶号（md5，跨进程稳定，不受 PYTHONHASHSEED 影响）"""
    md5 = hashlib.md5(key.encode()).hexdigest()
    return int(md5, 16) % buckets


def stable_coin(salt: str, *parts) -> bool:
    """确定性伪随机布尔值：同样的参数永远得到同样的结果"""
    return stable_bucket(salt + "|" + repr(parts), 2) == 1
