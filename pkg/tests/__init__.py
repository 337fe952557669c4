# type-a-completeness 테스트 패키지
