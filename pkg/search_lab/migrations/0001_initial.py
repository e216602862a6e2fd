from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CertificateRecord',
            fields=[
                ('id', models.AutoField(primary_key=True, serialize=False)),
                ('q', models.PositiveIntegerField()),
                ('k', models.PositiveSmallIntegerField()),
                ('n', models.PositiveSmallIntegerField()),
                ('c', models.PositiveSmallIntegerField()),
                ('e_value', models.PositiveIntegerField(help_text='Exact e_q(k,n,c), or a lower bound when exact is False')),
                ('exact', models.BooleanField(default=True)),
                ('scope', models.CharField(choices=[('exhaustive', 'Exhaustive'), ('explored region', 'Explored region only')], default='exhaustive', max_length=16)),
                ('witness', models.JSONField(blank=True, null=True)),
                ('checks', models.JSONField(default=list)),
                ('node_budget', models.BigIntegerField()),
                ('nodes_used', models.BigIntegerField()),
                ('vertex_count', models.PositiveIntegerField(default=0)),
                ('edge_count', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('notes', models.TextField(blank=True, null=True)),
            ],
            options={
                'verbose_name': 'Search Certificate',
                'verbose_name_plural': 'Search Certificates',
                'db_table': 'search_certificates',
                'ordering': ['-created_at', '-id'],
                'indexes': [models.Index(fields=['q', 'k', 'n', 'c'], name='certificate_parameters_idx')],
            },
        ),
    ]
