# 단위 테스트 패키지
