"""Pacote principal da aplicação.""" 